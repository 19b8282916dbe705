// File output formats: bit-exact CSV state round trip, PGM header and pixel
// layout, the radial scatter file, and the run log.
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "activeflux/io.hpp"

using namespace activeflux;

namespace {

// Unique temp path per test run; removed by the caller.
std::string temp_path(const char* tag) {
    return std::string("io_test_") + tag + ".tmp";
}

GridState random_state(int nx, int ny, BoundaryKind bc, unsigned seed) {
    GridState g(nx, ny, -0.5, 1.5, 0.25, 1.25, bc);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> val(0.1, 3.0);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            g.avg(i, j) = ConsState{val(rng), val(rng) - 1.5, val(rng) - 1.5,
                                    val(rng) + 2.0};
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            g.node(i, j) = PrimState{val(rng), val(rng) - 1.5, val(rng) - 1.5,
                                     val(rng)};
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i <= nx; ++i)
            g.edge_x(i, j) = PrimState{val(rng), val(rng) - 1.5,
                                       val(rng) - 1.5, val(rng)};
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i < nx; ++i)
            g.edge_y(i, j) = PrimState{val(rng), val(rng) - 1.5,
                                       val(rng) - 1.5, val(rng)};
    g.apply_boundary();
    return g;
}

} // namespace

TEST_CASE("state CSV round trip is bit exact") {
    const std::string path = temp_path("csv");
    for (const BoundaryKind bc : {BoundaryKind::periodic, BoundaryKind::outflow}) {
        const GridState g = random_state(5, 3, bc, 42);
        write_state_csv(g, path);
        const GridState r = read_state_csv(path);
        REQUIRE(r.nx() == 5);
        REQUIRE(r.ny() == 3);
        CHECK(r.boundary() == bc);
        CHECK(r.dx() == g.dx());
        CHECK(r.node_x(0) == g.node_x(0));
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 5; ++i) {
                CHECK(r.avg(i, j).rho == g.avg(i, j).rho);
                CHECK(r.avg(i, j).mx == g.avg(i, j).mx);
                CHECK(r.avg(i, j).my == g.avg(i, j).my);
                CHECK(r.avg(i, j).E == g.avg(i, j).E);
            }
        for (int j = 0; j <= 3; ++j)
            for (int i = 0; i <= 5; ++i) {
                CHECK(r.node(i, j).rho == g.node(i, j).rho);
                CHECK(r.node(i, j).p == g.node(i, j).p);
            }
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i <= 5; ++i)
                CHECK(r.edge_x(i, j).u == g.edge_x(i, j).u);
        for (int j = 0; j <= 3; ++j)
            for (int i = 0; i < 5; ++i)
                CHECK(r.edge_y(i, j).v == g.edge_y(i, j).v);
    }
    std::remove(path.c_str());
}

TEST_CASE("PGM output is a valid P5 file with row 0 on top") {
    const std::string path = temp_path("pgm");
    // 3x2 cells, values 0..5: the brightest cell (5) is at (i=2, j=1),
    // which is the last column of the FIRST image row.
    std::vector<double> v = {0, 1, 2, 3, 4, 5};
    write_pgm(v, 3, 2, path);

    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    in >> magic >> w >> h >> maxval;
    CHECK(magic == "P5");
    CHECK(w == 3);
    CHECK(h == 2);
    CHECK(maxval == 255);
    in.get();
    unsigned char px[6];
    in.read(reinterpret_cast<char*>(px), 6);
    REQUIRE(in.gcount() == 6);
    // top row = cell row j=1 (values 3,4,5), bottom row = j=0 (0,1,2)
    CHECK(px[0] == 153);
    CHECK(px[2] == 255);
    CHECK(px[3] == 0);
    CHECK(px[5] == 102);
    std::remove(path.c_str());
}

TEST_CASE("constant-field PGM does not divide by zero") {
    const std::string path = temp_path("pgm_const");
    std::vector<double> v(12, 7.5);
    write_pgm(v, 4, 3, path);
    std::ifstream in(path, std::ios::binary);
    std::string magic;
    int w, h, maxval;
    in >> magic >> w >> h >> maxval;
    in.get();
    unsigned char px[12];
    in.read(reinterpret_cast<char*>(px), 12);
    REQUIRE(in.gcount() == 12);
    for (unsigned char p : px) CHECK((p == 0 || p == 255 || p == 127 || p == 128));
    std::remove(path.c_str());
}

TEST_CASE("radial CSV lists one row per cell with the right radius") {
    const std::string path = temp_path("radial");
    GridState g = random_state(4, 4, BoundaryKind::outflow, 7);
    write_radial_csv(g, 0.5, 0.75, 1.4, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header.find('r') != std::string::npos);
    int rows = 0;
    double rmax = 0.0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        std::istringstream ls(line);
        double r;
        char comma;
        double rho, p, speed;
        ls >> r >> comma >> rho >> comma >> p >> comma >> speed;
        CHECK(r >= 0.0);
        CHECK(rho > 0.0);
        if (r > rmax) rmax = r;
    }
    CHECK(rows == 16);
    // Farthest cell center from (0.5, 0.75) in [-0.5,1.5]x[0.25,1.25]
    const double dx = g.dx(), dy = g.dy();
    const double fx = std::max(0.5 - (-0.5 + 0.5 * dx), (1.5 - 0.5 * dx) - 0.5);
    const double fy = std::max(0.75 - (0.25 + 0.5 * dy), (1.25 - 0.5 * dy) - 0.75);
    CHECK(rmax == doctest::Approx(std::hypot(fx, fy)).epsilon(1e-12));
    std::remove(path.c_str());
}

TEST_CASE("run log writes lines when given a path and stays silent without") {
    const std::string path = temp_path("log");
    {
        RunLog log(path);
        log.line("alpha");
        log.line("beta");
    }
    std::ifstream in(path);
    std::string a, b;
    std::getline(in, a);
    std::getline(in, b);
    CHECK(a == "alpha");
    CHECK(b == "beta");
    std::remove(path.c_str());

    RunLog silent("");
    silent.line("ignored");
}
