#include "activeflux/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace activeflux {

namespace {

// %.17g round-trips IEEE doubles exactly through decimal.
void append_g17(std::string& s, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    s += buf;
}

struct LineWriter {
    explicit LineWriter(const std::string& path) : out(path, std::ios::binary) {
        if (!out) throw std::runtime_error("cannot open for writing: " + path);
    }
    void row(const char* kind, int i, int j, double a, double b, double c,
             double d) {
        buf.clear();
        buf += kind;
        buf += ',';
        buf += std::to_string(i);
        buf += ',';
        buf += std::to_string(j);
        for (double v : {a, b, c, d}) {
            buf += ',';
            append_g17(buf, v);
        }
        buf += '\n';
        out << buf;
    }
    std::ofstream out;
    std::string buf;
};

} // namespace

void write_state_csv(const GridState& g, const std::string& path) {
    LineWriter w(path);
    {
        std::string meta = "# state\n# ";
        meta += "nx=" + std::to_string(g.nx()) + " ny=" + std::to_string(g.ny());
        for (auto [key, val] :
             {std::pair<const char*, double>{"xmin", g.xmin()},
              {"xmax", g.xmax()},
              {"ymin", g.ymin()},
              {"ymax", g.ymax()},
              {"time", g.time}}) {
            meta += " ";
            meta += key;
            meta += "=";
            append_g17(meta, val);
        }
        meta += " boundary=";
        meta += g.boundary() == BoundaryKind::periodic ? "periodic" : "outflow";
        meta += "\nkind,i,j,v0,v1,v2,v3\n";
        w.out << meta;
    }
    const int imax = g.node_imax(), jmax = g.node_jmax();
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            const ConsState& q = g.avg(i, j);
            w.row("avg", i, j, q.rho, q.mx, q.my, q.E);
        }
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= imax; ++i) {
            const PrimState& q = g.node(i, j);
            w.row("node", i, j, q.rho, q.u, q.v, q.p);
        }
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i <= imax; ++i) {
            const PrimState& q = g.edge_x(i, j);
            w.row("edge_x", i, j, q.rho, q.u, q.v, q.p);
        }
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i < g.nx(); ++i) {
            const PrimState& q = g.edge_y(i, j);
            w.row("edge_y", i, j, q.rho, q.u, q.v, q.p);
        }
}

GridState read_state_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state csv: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# state", 0) != 0)
        throw std::runtime_error("not a state csv: " + path);
    if (!std::getline(in, line))
        throw std::runtime_error("truncated state csv: " + path);
    int nx = 0, ny = 0;
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0, time = 0;
    char bname[16] = {0};
    if (std::sscanf(line.c_str(),
                    "# nx=%d ny=%d xmin=%lf xmax=%lf ymin=%lf ymax=%lf "
                    "time=%lf boundary=%15s",
                    &nx, &ny, &xmin, &xmax, &ymin, &ymax, &time, bname) != 8)
        throw std::runtime_error("bad state csv metadata: " + path);
    const BoundaryKind bc = std::strcmp(bname, "periodic") == 0
                                ? BoundaryKind::periodic
                                : BoundaryKind::outflow;
    GridState g(nx, ny, xmin, xmax, ymin, ymax, bc);
    g.time = time;
    std::getline(in, line); // header row
    char kind[16];
    int i, j;
    double v[4];
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (std::sscanf(line.c_str(), "%15[^,],%d,%d,%lf,%lf,%lf,%lf", kind,
                        &i, &j, &v[0], &v[1], &v[2], &v[3]) != 7)
            throw std::runtime_error("bad state csv row: " + line);
        if (std::strcmp(kind, "avg") == 0)
            g.avg(i, j) = ConsState{v[0], v[1], v[2], v[3]};
        else if (std::strcmp(kind, "node") == 0)
            g.node(i, j) = PrimState{v[0], v[1], v[2], v[3]};
        else if (std::strcmp(kind, "edge_x") == 0)
            g.edge_x(i, j) = PrimState{v[0], v[1], v[2], v[3]};
        else if (std::strcmp(kind, "edge_y") == 0)
            g.edge_y(i, j) = PrimState{v[0], v[1], v[2], v[3]};
        else
            throw std::runtime_error("unknown dof kind: " + line);
    }
    g.apply_boundary();
    return g;
}

void write_radial_csv(const GridState& g, double cx, double cy, double gamma,
                      const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "r,rho,p,speed\n";
    std::string buf;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            const PrimState q = cons_to_prim(g.avg(i, j), gamma);
            const double r =
                std::hypot(g.center_x(i) - cx, g.center_y(j) - cy);
            buf.clear();
            append_g17(buf, r);
            buf += ',';
            append_g17(buf, q.rho);
            buf += ',';
            append_g17(buf, q.p);
            buf += ',';
            append_g17(buf, std::hypot(q.u, q.v));
            buf += '\n';
            out << buf;
        }
}

void write_pgm(const std::vector<double>& cell_values, int nx, int ny,
               const std::string& path) {
    if (cell_values.size() != std::size_t(nx) * ny)
        throw std::invalid_argument("pgm value count mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    const auto [lo_it, hi_it] =
        std::minmax_element(cell_values.begin(), cell_values.end());
    const double lo = *lo_it, hi = *hi_it;
    const double scale = hi > lo ? 255.0 / (hi - lo) : 0.0;
    out << "P5\n" << nx << " " << ny << "\n255\n";
    std::vector<unsigned char> row(nx);
    for (int j = ny - 1; j >= 0; --j) {
        for (int i = 0; i < nx; ++i) {
            const double v = cell_values[std::size_t(j) * nx + i];
            row[i] = hi > lo
                         ? static_cast<unsigned char>(
                               std::lround((v - lo) * scale))
                         : static_cast<unsigned char>(128);
        }
        out.write(reinterpret_cast<const char*>(row.data()), nx);
    }
}

void write_density_pgm(const GridState& g, const std::string& path) {
    std::vector<double> vals(std::size_t(g.nx()) * g.ny());
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            vals[std::size_t(j) * g.nx() + i] = g.avg(i, j).rho;
    write_pgm(vals, g.nx(), g.ny(), path);
}

void write_speed_pgm(const GridState& g, double gamma,
                     const std::string& path) {
    std::vector<double> vals(std::size_t(g.nx()) * g.ny());
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            const PrimState q = cons_to_prim(g.avg(i, j), gamma);
            vals[std::size_t(j) * g.nx() + i] = std::hypot(q.u, q.v);
        }
    write_pgm(vals, g.nx(), g.ny(), path);
}

RunLog::RunLog(const std::string& path) {
    if (!path.empty()) {
        out_.open(path, std::ios::binary);
        if (!out_) throw std::runtime_error("cannot open run log: " + path);
        enabled_ = true;
    }
}

void RunLog::line(const std::string& text) {
    if (!enabled_) return;
    out_ << text << '\n';
    out_.flush();
}

} // namespace activeflux
