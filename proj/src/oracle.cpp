#include "melonic/oracle.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

namespace melonic {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

class TreeWalker {
public:
    explicit TreeWalker(const Graph& g) : g_(g), all_((g.edge_count() == 64) ? ~0ULL : ((1ULL << g.edge_count()) - 1)) {}

    std::vector<std::uint64_t> run() {
        walk(0, Dsu(g_.vertex_count), 0, g_.vertex_count);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    // components still joinable using edges from index i on
    bool connectable(std::size_t i, Dsu d, int comps) const {
        for (; i < g_.edges.size() && comps > 1; ++i)
            if (d.unite(g_.edges[i].first, g_.edges[i].second)) --comps;
        return comps == 1;
    }

    void walk(std::size_t i, Dsu d, std::uint64_t tree, int comps) {
        if (comps == 1) {
            out_.push_back(all_ & ~tree);
            return;
        }
        if (i == g_.edges.size()) return;
        const auto [u, v] = g_.edges[i];
        if (d.find(u) != d.find(v)) {
            Dsu with = d;
            with.unite(u, v);
            walk(i + 1, std::move(with), tree | (1ULL << i), comps - 1);
        }
        if (connectable(i + 1, d, comps)) walk(i + 1, std::move(d), tree, comps);
    }

    const Graph& g_;
    std::uint64_t all_;
    std::vector<std::uint64_t> out_;
};

FiniteField prime_field(int p) {
    FiniteField f;
    f.q = p;
    f.add.resize(static_cast<std::size_t>(p * p));
    f.mul.resize(static_cast<std::size_t>(p * p));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            f.add[static_cast<std::size_t>(a * p + b)] = static_cast<std::uint8_t>((a + b) % p);
            f.mul[static_cast<std::size_t>(a * p + b)] = static_cast<std::uint8_t>((a * b) % p);
        }
    return f;
}

FiniteField f4() {
    FiniteField f;
    f.q = 4;
    f.add.resize(16);
    f.mul.resize(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            f.add[static_cast<std::size_t>(a * 4 + b)] = static_cast<std::uint8_t>(a ^ b);
            // (a1 x + a0)(b1 x + b0) with x^2 = x + 1
            const int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
            const int hi = a1 & b1;
            const int c1 = ((a1 & b0) ^ (a0 & b1) ^ hi) & 1;
            const int c0 = ((a0 & b0) ^ hi) & 1;
            f.mul[static_cast<std::size_t>(a * 4 + b)] = static_cast<std::uint8_t>(2 * c1 + c0);
        }
    return f;
}

std::uint64_t count_range(const KirchhoffPoly& psi, const FiniteField& f, std::uint64_t begin, std::uint64_t end) {
    const int n = psi.edge_count;
    std::vector<std::uint8_t> t(static_cast<std::size_t>(n), 0);
    std::uint64_t x = begin;
    for (int i = 0; i < n; ++i) {
        t[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x % static_cast<std::uint64_t>(f.q));
        x /= static_cast<std::uint64_t>(f.q);
    }
    std::vector<std::vector<int>> mons;
    mons.reserve(psi.monomials.size());
    for (std::uint64_t m : psi.monomials) {
        std::vector<int> vars;
        for (int e = 0; e < n; ++e)
            if (m >> e & 1ULL) vars.push_back(e);
        mons.push_back(std::move(vars));
    }
    std::uint64_t count = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint8_t sum = 0;
        for (const auto& vars : mons) {
            std::uint8_t prod = 1;
            for (int e : vars) {
                prod = f.times(prod, t[static_cast<std::size_t>(e)]);
                if (prod == 0) break;
            }
            sum = f.plus(sum, prod);
        }
        if (sum != 0) ++count;
        for (int i = 0; i < n; ++i) {
            auto& d = t[static_cast<std::size_t>(i)];
            if (++d < f.q) break;
            d = 0;
        }
    }
    return count;
}

}  // namespace

KirchhoffPoly kirchhoff(const Graph& g) {
    if (g.edge_count() > 64) throw std::invalid_argument("kirchhoff supports at most 64 edges");
    if (!g.is_connected()) throw std::invalid_argument("kirchhoff: graph is disconnected");
    KirchhoffPoly k;
    k.edge_count = g.edge_count();
    k.vertex_count = g.vertex_count;
    k.monomials = TreeWalker(g).run();
    return k;
}

const FiniteField& finite_field(int q) {
    static const FiniteField f2 = prime_field(2), f3 = prime_field(3), f4_ = f4(), f5 = prime_field(5);
    switch (q) {
        case 2: return f2;
        case 3: return f3;
        case 4: return f4_;
        case 5: return f5;
        default: throw std::invalid_argument("finite_field: q must be 2, 3, 4 or 5");
    }
}

std::uint64_t point_count(const KirchhoffPoly& psi, int q, std::uint64_t budget, unsigned workers) {
    const FiniteField& f = finite_field(q);
    std::uint64_t total = 1;
    for (int i = 0; i < psi.edge_count; ++i) {
        if (total > budget / static_cast<std::uint64_t>(q)) {
            std::ostringstream os;
            os << "point count needs " << q << "^" << psi.edge_count << " evaluations, over the budget of " << budget
               << "; use a smaller graph or q";
            throw BudgetExceeded(os.str());
        }
        total *= static_cast<std::uint64_t>(q);
    }
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
    if (workers == 1) return count_range(psi, f, 0, total);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t b = total * w / workers, e = total * (w + 1) / workers;
        pool.emplace_back([&, w, b, e] { partial[w] = count_range(psi, f, b, e); });
    }
    for (auto& t : pool) t.join();
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

std::uint64_t point_count(const Graph& g, int q, std::uint64_t budget, unsigned workers) {
    return point_count(kirchhoff(g), q, budget, workers);
}

VerifyReport verify_class(const Graph& g, const GrothendieckClass& u, const std::vector<int>& qs, std::uint64_t budget,
                          unsigned workers) {
    VerifyReport r;
    const KirchhoffPoly psi = kirchhoff(g);
    std::ostringstream why;
    for (std::uint64_t m : psi.monomials)
        if (std::popcount(m) != psi.degree()) r.degree_ok = false;
    if (!r.degree_ok) why << "Kirchhoff polynomial is not homogeneous of degree " << psi.degree() << "; ";
    const IntPoly in_l = change_basis(u.poly, Basis::L);
    r.edges_ok = in_l.degree() == g.edge_count() && u.edges == g.edge_count();
    if (!r.edges_ok)
        why << "class degree " << in_l.degree() << " / edges " << u.edges << " vs graph edges " << g.edge_count() << "; ";
    for (int q : qs) {
        PointCheck c;
        c.q = q;
        c.expected = eval_int(in_l, q);
        c.got = point_count(psi, q, budget, workers);
        c.ok = c.expected == c.got;
        if (!c.ok) why << "q=" << q << " expected " << c.expected << " got " << c.got << "; ";
        r.checks.push_back(std::move(c));
    }
    r.ok = r.degree_ok && r.edges_ok &&
           std::all_of(r.checks.begin(), r.checks.end(), [](const PointCheck& c) { return c.ok; });
    if (!r.ok) {
        std::ostringstream os;
        os << "graph V=" << g.vertex_count << " E=" << g.edge_count() << ": " << why.str();
        r.failure = os.str();
    }
    return r;
}

VerifyReport verify_class(const MelonicConstruction& c, const GrothendieckClass& u, const std::vector<int>& qs,
                          std::uint64_t budget, unsigned workers) {
    VerifyReport r = verify_class(realize_graph(c), u, qs, budget, workers);
    if (!r.ok) r.failure = "construction " + to_dsl(c) + ", " + r.failure;
    return r;
}

std::int64_t spanning_tree_count(const Graph& g) {
    const int n = g.vertex_count;
    if (n <= 1) return 1;
    using Mat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
    Mat lap = Mat::Zero(n, n);
    for (const auto& [u, v] : g.edges) {
        if (u == v) continue;
        lap(u, u) += 1;
        lap(v, v) += 1;
        lap(u, v) -= 1;
        lap(v, u) -= 1;
    }
    Mat a = lap.bottomRightCorner(n - 1, n - 1);
    const int m = n - 1;
    std::int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k < m; ++k) {
        if (a(k, k) == 0) {
            int r = k + 1;
            while (r < m && a(r, k) == 0) ++r;
            if (r == m) return 0;
            a.row(k).swap(a.row(r));
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j) {
                std::int64_t x, y, z;
                if (__builtin_mul_overflow(a(i, j), a(k, k), &x) || __builtin_mul_overflow(a(i, k), a(k, j), &y) ||
                    __builtin_sub_overflow(x, y, &z))
                    throw std::overflow_error("spanning_tree_count: intermediate exceeds int64");
                a(i, j) = z / prev;
            }
        prev = a(k, k);
    }
    return sign * a(m - 1, m - 1);
}

}  // namespace melonic
