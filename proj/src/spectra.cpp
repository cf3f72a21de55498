#include "rhot/spectra.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rhot {

double lt_norm(const std::vector<double>& x, int t) {
    double s = 0.0;
    for (double v : x) s += std::pow(std::abs(v), t);
    return std::pow(s, 1.0 / t);
}

std::vector<double> scale_to_max_entry(std::vector<double> x) {
    double mx = 0.0;
    for (double v : x) mx = std::max(mx, v);
    if (mx > 0.0)
        for (double& v : x) v /= mx;
    return x;
}

namespace {

void check_vector(const CliqueSet& cs, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != cs.n)
        throw std::invalid_argument("vector length does not match graph order");
    for (double v : x)
        if (!(v >= 0.0)) throw std::invalid_argument("vector must be nonnegative");
}

}  // namespace

std::vector<double> apply_tensor(const CliqueSet& cs, const std::vector<double>& x) {
    check_vector(cs, x);
    const int t = cs.t;
    std::vector<double> out(static_cast<std::size_t>(cs.n), 0.0);
    double pre[kMaxVertices], suf[kMaxVertices];
    for (std::size_t i = 0; i < cs.count(); ++i) {
        const std::uint8_t* v = cs.clique_vertices(i);
        double p = 1.0;
        for (int j = 0; j < t; ++j) {
            pre[j] = p;
            p *= x[v[j]];
        }
        p = 1.0;
        for (int j = t - 1; j >= 0; --j) {
            suf[j] = p;
            p *= x[v[j]];
        }
        for (int j = 0; j < t; ++j) out[v[j]] += pre[j] * suf[j];
    }
    return out;
}

double rayleigh(const CliqueSet& cs, const std::vector<double>& x) {
    check_vector(cs, x);
    if (std::abs(lt_norm(x, cs.t) - 1.0) > 1e-9)
        throw std::invalid_argument("rayleigh: vector must have l_t norm 1");
    double s = 0.0;
    for (std::size_t i = 0; i < cs.count(); ++i) {
        const std::uint8_t* v = cs.clique_vertices(i);
        double p = 1.0;
        for (int j = 0; j < cs.t; ++j) p *= x[v[j]];
        s += p;
    }
    return cs.t * s;
}

double eigen_residual(const CliqueSet& cs, double lambda, const std::vector<double>& x) {
    std::vector<double> ax = apply_tensor(cs, x);
    VertexSet cov = cs.covered();
    double worst = 0.0;
    while (cov) {
        int j = std::countr_zero(cov);
        cov &= cov - 1;
        double d = std::abs(ax[static_cast<std::size_t>(j)] -
                            lambda * std::pow(x[static_cast<std::size_t>(j)], cs.t - 1));
        worst = std::max(worst, d);
    }
    return worst;
}

namespace {

// Power iteration on the cliques of one component, local vertex indexing.
struct ComponentProblem {
    int t;
    std::vector<int> verts;                  // global ids, ascending
    std::vector<std::uint8_t> flat;          // local clique vertices, t per clique
    std::size_t clique_count = 0;
};

ComponentResult iterate_component(const ComponentProblem& cp, const SpectralOptions& opts) {
    const int t = cp.t;
    const std::size_t cnt = cp.verts.size();
    ComponentResult res;
    res.vertices = cp.verts;

    std::vector<double> x(cnt);
    if (opts.start) {
        for (std::size_t i = 0; i < cnt; ++i) {
            double v = (*opts.start)[static_cast<std::size_t>(cp.verts[i])];
            if (!(v > 0.0))
                throw std::invalid_argument("start vector must be positive on clique-covered vertices");
            x[i] = v;
        }
    } else {
        x.assign(cnt, 1.0);
    }
    {
        double norm = lt_norm(x, t);
        for (double& v : x) v /= norm;
    }

    std::vector<double> ax(cnt), xp(cnt);
    double pre[kMaxVertices], suf[kMaxVertices];
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();

    for (long it = 1; it <= opts.max_iters; ++it) {
        res.iterations = it;
        for (std::size_t i = 0; i < cnt; ++i) {
            ax[i] = 0.0;
            xp[i] = (t == 2) ? x[i] : std::pow(x[i], t - 1);
        }
        for (std::size_t c = 0; c < cp.clique_count; ++c) {
            const std::uint8_t* v = cp.flat.data() + c * static_cast<std::size_t>(t);
            double p = 1.0;
            for (int j = 0; j < t; ++j) {
                pre[j] = p;
                p *= x[v[j]];
            }
            p = 1.0;
            for (int j = t - 1; j >= 0; --j) {
                suf[j] = p;
                p *= x[v[j]];
            }
            for (int j = 0; j < t; ++j) ax[v[j]] += pre[j] * suf[j];
        }
        double lmin = std::numeric_limits<double>::infinity(), lmax = 0.0;
        for (std::size_t i = 0; i < cnt; ++i) {
            double r = ax[i] / xp[i];
            lmin = std::min(lmin, r);
            lmax = std::max(lmax, r);
        }
        lo = std::max(lo, lmin);
        hi = std::min(hi, lmax);
        if (hi - lo <= opts.tol) {
            res.converged = true;
            break;
        }
        for (std::size_t i = 0; i < cnt; ++i) {
            double y = ax[i] + opts.shift * xp[i];
            x[i] = (t == 2) ? y : std::pow(y, 1.0 / (t - 1));
        }
        double norm = lt_norm(x, t);
        for (double& v : x) v /= norm;
    }

    res.gap = hi - lo;
    res.rho = 0.5 * (hi + lo);
    double norm = lt_norm(x, t);
    for (double& v : x) v /= norm;
    res.perron = std::move(x);
    return res;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, int t, const SpectralOptions& opts) {
    if (t < 2) throw std::invalid_argument("spectral_radius: t must be >= 2");
    if (opts.tol <= 0.0) throw std::invalid_argument("spectral_radius: tol must be positive");
    if (opts.max_iters < 1) throw std::invalid_argument("spectral_radius: max_iters must be >= 1");
    if (opts.start && static_cast<int>(opts.start->size()) != g.order())
        throw std::invalid_argument("spectral_radius: start vector length mismatch");

    SpectralResult result;
    CliqueSet cs = enumerate_cliques(g, t);
    if (cs.count() == 0) return result;  // zero tensor

    CliqueComponents cc = clique_components(cs);
    for (const VertexSet comp : cc.components) {
        ComponentProblem cp;
        cp.t = t;
        int local[kMaxVertices];
        VertexSet scan = comp;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            local[v] = static_cast<int>(cp.verts.size());
            cp.verts.push_back(v);
        }
        for (std::size_t i = 0; i < cs.count(); ++i) {
            if (!(cs.cliques[i] & comp)) continue;
            const std::uint8_t* v = cs.clique_vertices(i);
            for (int j = 0; j < t; ++j)
                cp.flat.push_back(static_cast<std::uint8_t>(local[v[j]]));
            ++cp.clique_count;
        }
        result.components.push_back(iterate_component(cp, opts));
    }

    for (std::size_t i = 0; i < result.components.size(); ++i) {
        const ComponentResult& cr = result.components[i];
        if (!cr.converged) result.converged = false;
        if (cr.rho > result.rho) {
            result.rho = cr.rho;
            result.winner = static_cast<int>(i);
        }
    }
    if (result.winner < 0) result.winner = 0;
    if (result.rho < 0.0) result.rho = 0.0;

    // Eigen-equation defect of the winning pair, on the full vertex set.
    const ComponentResult& win = result.components[static_cast<std::size_t>(result.winner)];
    std::vector<double> full(static_cast<std::size_t>(g.order()), 0.0);
    for (std::size_t i = 0; i < win.vertices.size(); ++i)
        full[static_cast<std::size_t>(win.vertices[i])] = win.perron[i];
    CliqueSet sub;
    sub.t = t;
    sub.n = g.order();
    sub.incidence.assign(static_cast<std::size_t>(g.order()), {});
    VertexSet comp_mask = 0;
    for (int v : win.vertices) comp_mask |= vertex_bit(v);
    for (std::size_t i = 0; i < cs.count(); ++i) {
        if (!(cs.cliques[i] & comp_mask)) continue;
        sub.cliques.push_back(cs.cliques[i]);
        const std::uint8_t* v = cs.clique_vertices(i);
        sub.flat_vertices.insert(sub.flat_vertices.end(), v, v + t);
    }
    result.residual = eigen_residual(sub, result.rho, full);
    return result;
}

bool weakly_irreducible(const Graph& g, int t) {
    const int n = g.order();
    if (t < 2) throw std::invalid_argument("weakly_irreducible: t must be >= 2");
    if (n == 0) return false;

    // Representation digraph: arc i -> j whenever some nonzero tensor entry
    // has first index i and j among the rest, i.e. i and j share a t-clique.
    CliqueSet cs = enumerate_cliques(g, t);
    VertexSet arcs[kMaxVertices] = {};
    for (std::size_t i = 0; i < cs.count(); ++i) {
        const std::uint8_t* v = cs.clique_vertices(i);
        for (int a = 0; a < t; ++a) arcs[v[a]] |= cs.cliques[i] & ~vertex_bit(v[a]);
    }
    // Strong connectivity on all n vertices (the arc relation is symmetric
    // here, so one reachability sweep decides it).
    VertexSet reached = vertex_bit(0), frontier = vertex_bit(0);
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= arcs[v] & ~reached;
        }
        reached |= next;
        frontier = next;
    }
    return reached == all_vertices(n);
}

}  // namespace rhot
