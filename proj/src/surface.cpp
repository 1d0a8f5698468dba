#include "vmosaic/surface.hpp"

#include <cassert>
#include <numeric>
#include <vector>

#include "vmosaic/errors.hpp"

namespace vmosaic {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
    int classes() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

} // namespace

int boundary_vertices(const Mosaic& mo) {
    require_valid(mo);
    int nb = mo.boundary_count();
    Dsu dsu(nb); // corner k starts edge k
    for (int i = 0; i < nb; ++i) {
        int j = mo.mate[i];
        if (i > j) continue;
        dsu.merge(i, (j + 1) % nb);       // start(i) ~ end(j)
        dsu.merge((i + 1) % nb, j);       // end(i) ~ start(j)
    }
    return dsu.classes();
}

SurfaceReport genus(const Mosaic& mo) {
    SurfaceReport report;
    report.v = boundary_vertices(mo);
    int twice = 1 - report.v + mo.m + mo.n;
    assert(twice >= 0 && twice % 2 == 0); // orientation-reversing gluing
    report.genus = twice / 2;
    report.virtual_crossings = count_interlocking(mo);
    return report;
}

int genus_oracle(const Mosaic& mo) {
    require_valid(mo);
    int m = mo.m, n = mo.n;
    // Cell structure of the glued surface before identification: lattice
    // points, horizontal segments, vertical segments, and the m*n cells.
    auto point = [&](int r, int c) { return r * (n + 1) + c; };
    int npoints = (m + 1) * (n + 1);
    auto hseg = [&](int r, int c) { return r * n + c; }; // (r,c)->(r,c+1)
    int nh = (m + 1) * n;
    auto vseg = [&](int r, int c) { return nh + c * m + r; }; // (r,c)->(r+1,c)
    int nv = (n + 1) * m;

    Dsu points(npoints);
    Dsu segs(nh + nv);

    // Boundary edge e, walked counterclockwise, as (segment, start, end).
    struct Walked {
        int seg, from, to;
    };
    int nb = mo.boundary_count();
    auto walked = [&](int e) -> Walked {
        if (e < m) return {vseg(e, 0), point(e, 0), point(e + 1, 0)};
        if (e < m + n) {
            int c = e - m;
            return {hseg(m, c), point(m, c), point(m, c + 1)};
        }
        if (e < 2 * m + n) {
            int r = m - 1 - (e - m - n);
            return {vseg(r, n), point(r + 1, n), point(r, n)};
        }
        int c = n - 1 - (e - 2 * m - n);
        return {hseg(0, c), point(0, c + 1), point(0, c)};
    };
    for (int i = 0; i < nb; ++i) {
        int j = mo.mate[i];
        if (i > j) continue;
        Walked a = walked(i), b = walked(j);
        segs.merge(a.seg, b.seg);
        points.merge(a.from, b.to); // orientation-reversing
        points.merge(a.to, b.from);
    }

    int V = points.classes();
    int E = segs.classes();
    int F = m * n;
    int chi = V - E + F;
    assert((2 - chi) % 2 == 0);
    return (2 - chi) / 2;
}

int count_interlocking(const Mosaic& mo) {
    require_valid(mo);
    int nb = mo.boundary_count();
    std::vector<std::pair<int, int>> arcs;
    for (int e = 0; e < nb; ++e)
        if (e < mo.mate[e] && edge_has_arc(mo, e)) arcs.push_back({e, mo.mate[e]});
    int count = 0;
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            auto [a, b] = arcs[i];
            auto [c, d] = arcs[j];
            bool c_inside = a < c && c < b;
            bool d_inside = a < d && d < b;
            if (c_inside != d_inside) ++count;
        }
    return count;
}

} // namespace vmosaic
