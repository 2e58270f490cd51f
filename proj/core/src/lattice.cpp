#include "lwedcp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace lwedcp {

namespace {

struct GsData {
    std::vector<RatVec> mu;  // lower triangular, mu[i][j] for j < i
    RatVec d;                // squared Gram-Schmidt norms
};

// mu / d from a Gram matrix alone; throws on dependent columns.
GsData gs_from_gram(const std::vector<RatVec>& gram) {
    const std::size_t r = gram.size();
    GsData gs;
    gs.mu.assign(r, RatVec(r, Rat(0)));
    gs.d.assign(r, Rat(0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat acc = gram[i][j];
            for (std::size_t k = 0; k < j; ++k) acc -= gs.mu[i][k] * gs.mu[j][k] * gs.d[k];
            gs.mu[i][j] = acc / gs.d[j];
        }
        Rat di = gram[i][i];
        for (std::size_t j = 0; j < i; ++j) di -= gs.mu[i][j] * gs.mu[i][j] * gs.d[j];
        if (di <= 0) throw std::invalid_argument("basis columns are linearly dependent");
        gs.d[i] = di;
    }
    return gs;
}

std::vector<RatVec> gram_of_cols(const std::vector<IntVec>& cols) {
    const std::size_t r = cols.size();
    std::vector<RatVec> g(r, RatVec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Rat v = Rat(dot(cols[i], cols[j]));
            g[i][j] = v;
            g[j][i] = v;
        }
    return g;
}

// Shared Fincke-Pohst style enumerator over (mu, d). `target` shifts the
// center at each level (closest-vector form); empty means homogeneous.
class Enumerator {
public:
    Enumerator(const GsData& gs, const RatVec& target, const Rat& radius_sq, long max_nodes)
        : gs_(gs), target_(target), radius_sq_(radius_sq), max_nodes_(max_nodes),
          r_(gs.d.size()), x_(gs.d.size(), Int(0)) {}

    void run(const std::function<void(const IntVec&, const Rat&)>& emit) {
        if (r_ == 0) return;
        recurse(static_cast<long>(r_) - 1, radius_sq_, emit);
    }

private:
    void recurse(long level, const Rat& rem, const std::function<void(const IntVec&, const Rat&)>& emit) {
        const std::size_t i = static_cast<std::size_t>(level);
        Rat cc(0);
        for (std::size_t j = i + 1; j < r_; ++j) cc += gs_.mu[j][i] * Rat(x_[j]);
        if (!target_.empty()) cc -= target_[i];

        // d_i (x_i + cc)^2 <= rem
        Rat rho = rem / gs_.d[i];
        Int hi = floor_sqrt_sub(+1, rho, cc);
        Int lo = -floor_sqrt_sub(+1, rho, -cc);
        for (Int xi = lo; xi <= hi; ++xi) {
            if (++nodes_ > max_nodes_) throw std::runtime_error("enumeration budget exceeded");
            x_[i] = xi;
            Rat off = Rat(xi) + cc;
            Rat rem2 = rem - gs_.d[i] * off * off;
            if (rem2 < 0) continue;  // exact guard for boundary rounding
            if (level == 0) {
                emit(x_, radius_sq_ - rem2);
            } else {
                recurse(level - 1, rem2, emit);
            }
        }
        x_[i] = 0;
    }

    const GsData& gs_;
    const RatVec target_;
    Rat radius_sq_;
    long max_nodes_;
    long nodes_ = 0;
    std::size_t r_;
    IntVec x_;
};

bool canonical_sign(const IntVec& x) {
    for (const Int& c : x) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;  // zero vector: excluded anyway
}

IntVec combine(const std::vector<IntVec>& cols, const IntVec& coeffs) {
    IntVec out(cols.empty() ? 0 : cols[0].size(), Int(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs[j] * cols[j][i];
    return out;
}

}  // namespace

std::vector<RatVec> gram_matrix(const Basis& basis) { return gram_of_cols(basis.cols); }

Basis qary_basis(const IntMat& A, const Int& q) {
    if (A.empty()) throw std::invalid_argument("qary_basis: empty A");
    const std::size_t m = A.size();
    const std::size_t n = A[0].size();
    if (q < 2) throw std::invalid_argument("qary_basis: q must be >= 2");

    // generators: the n columns of A followed by q*I
    std::vector<IntVec> cols(n + m, IntVec(m, Int(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) cols[j][i] = mod_pos(A[i][j], q);
    for (std::size_t i = 0; i < m; ++i) cols[n + i][i] = q;

    // column Hermite normal form
    std::size_t p = 0;  // pivot column
    for (std::size_t row = 0; row < m; ++row) {
        std::size_t nz = p;
        while (nz < cols.size() && cols[nz][row] == 0) ++nz;
        if (nz == cols.size()) continue;  // cannot happen with the q*I block
        std::swap(cols[p], cols[nz]);
        for (std::size_t j = p + 1; j < cols.size(); ++j) {
            if (cols[j][row] == 0) continue;
            Int g, u, w;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(),
                       cols[p][row].get_mpz_t(), cols[j][row].get_mpz_t());
            Int a_over_g = cols[p][row] / g;
            Int b_over_g = cols[j][row] / g;
            IntVec np(m), nj(m);
            for (std::size_t i = 0; i < m; ++i) {
                np[i] = u * cols[p][i] + w * cols[j][i];
                nj[i] = a_over_g * cols[j][i] - b_over_g * cols[p][i];
            }
            cols[p] = np;
            cols[j] = nj;
        }
        if (cols[p][row] < 0)
            for (std::size_t i = 0; i < m; ++i) cols[p][i] = -cols[p][i];
        // reduce earlier columns: 0 <= entry < diagonal
        for (std::size_t j = 0; j < p; ++j) {
            Int t;
            mpz_fdiv_q(t.get_mpz_t(), cols[j][row].get_mpz_t(), cols[p][row].get_mpz_t());
            if (t != 0)
                for (std::size_t i = 0; i < m; ++i) cols[j][i] -= t * cols[p][i];
        }
        ++p;
    }
    if (p != m) throw std::runtime_error("qary_basis: rank deficiency (impossible with q*I block)");
    cols.resize(m);
    return Basis{cols};
}

Basis lll_reduce(const Basis& basis, const Rat& delta_lll) {
    if (delta_lll <= Rat(1, 4) || delta_lll >= 1)
        throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1)");
    Basis out = basis;
    const std::size_t r = out.rank();
    if (r <= 1) return out;

    GsData gs = gs_from_gram(gram_of_cols(out.cols));
    std::size_t k = 1;
    while (k < r) {
        // size-reduce column k against k-1 .. 0, updating mu row k in place
        for (std::size_t jj = k; jj-- > 0;) {
            Int t = round_rat(gs.mu[k][jj]);
            if (t != 0) {
                for (std::size_t i = 0; i < out.cols[k].size(); ++i)
                    out.cols[k][i] -= t * out.cols[jj][i];
                for (std::size_t l = 0; l < jj; ++l) gs.mu[k][l] -= Rat(t) * gs.mu[jj][l];
                gs.mu[k][jj] -= Rat(t);
            }
        }
        Rat lov = (delta_lll - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.d[k - 1];
        if (gs.d[k] >= lov) {
            ++k;
        } else {
            std::swap(out.cols[k - 1], out.cols[k]);
            gs = gs_from_gram(gram_of_cols(out.cols));
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return out;
}

IntVec babai_nearest(const Basis& reduced, const RatVec& y) {
    const std::size_t r = reduced.rank();
    if (r == 0 || y.size() != reduced.dim())
        throw std::invalid_argument("babai_nearest: dimension mismatch");

    // explicit Gram-Schmidt vectors
    std::vector<RatVec> bstar(r);
    RatVec dsq(r);
    for (std::size_t i = 0; i < r; ++i) {
        RatVec v(reduced.dim());
        for (std::size_t t = 0; t < v.size(); ++t) v[t] = Rat(reduced.cols[i][t]);
        for (std::size_t j = 0; j < i; ++j) {
            Rat coeff = dot(v, bstar[j]) / dsq[j];
            for (std::size_t t = 0; t < v.size(); ++t) v[t] -= coeff * bstar[j][t];
        }
        bstar[i] = v;
        dsq[i] = norm_sq(v);
        if (dsq[i] <= 0) throw std::invalid_argument("babai_nearest: dependent columns");
    }

    RatVec resid = y;
    IntVec c(reduced.dim(), Int(0));
    for (std::size_t i = r; i-- > 0;) {
        Int t = round_rat(dot(resid, bstar[i]) / dsq[i]);
        if (t != 0)
            for (std::size_t j = 0; j < resid.size(); ++j) {
                resid[j] -= Rat(t * reduced.cols[i][j]);
                c[j] += t * reduced.cols[i][j];
            }
    }
    return c;
}

Int determinant(const Basis& basis) {
    const std::size_t r = basis.rank();
    if (r != basis.dim()) throw std::invalid_argument("determinant: basis not square");
    // Bareiss fraction-free elimination
    std::vector<IntVec> M(r, IntVec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) M[i][j] = basis.cols[j][i];
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < r; ++k) {
        if (M[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < r && M[s][k] == 0) ++s;
            if (s == r) return Int(0);
            std::swap(M[s], M[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < r; ++i)
            for (std::size_t j = k + 1; j < r; ++j) {
                Int num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = M[k][k];
    }
    return sign > 0 ? M[r - 1][r - 1] : -M[r - 1][r - 1];
}

IntVec integral_coefficients(const Basis& basis, const IntVec& target) {
    const std::size_t r = basis.rank();
    if (r != basis.dim() || target.size() != r)
        throw std::invalid_argument("integral_coefficients: shape mismatch");
    // rational Gaussian elimination on [cols | target]
    std::vector<RatVec> w(r, RatVec(r + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) w[i][j] = Rat(basis.cols[j][i]);
        w[i][r] = Rat(target[i]);
    }
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        while (piv < r && w[piv][col] == 0) ++piv;
        if (piv == r) throw std::invalid_argument("integral_coefficients: singular basis");
        std::swap(w[piv], w[col]);
        Rat inv = Rat(1) / w[col][col];
        for (std::size_t j = col; j <= r; ++j) w[col][j] *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == col || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (std::size_t j = col; j <= r; ++j) w[i][j] -= f * w[col][j];
        }
    }
    IntVec x(r);
    for (std::size_t i = 0; i < r; ++i) {
        const Rat& xi = w[i][r];
        if (Int(mpq_denref(xi.get_mpq_t())) != 1)
            throw std::runtime_error("integral_coefficients: target not in the lattice");
        x[i] = Int(mpq_numref(xi.get_mpq_t()));
    }
    return x;
}

std::vector<IntVec> enumerate_coeffs(const std::vector<RatVec>& gram, const Rat& radius_sq,
                                     const EnumOptions& opts) {
    if (radius_sq < 0) throw std::invalid_argument("enumerate_coeffs: negative radius");
    GsData gs = gs_from_gram(gram);
    std::vector<IntVec> found;
    Enumerator en(gs, {}, radius_sq, opts.max_nodes);
    en.run([&](const IntVec& x, const Rat&) {
        if (canonical_sign(x)) found.push_back(x);
    });
    return found;
}

SvpResult shortest_vector_bruteforce(const Basis& basis, const Rat& radius_sq,
                                     const EnumOptions& opts) {
    GsData gs = gs_from_gram(gram_of_cols(basis.cols));
    bool have = false;
    IntVec best_x;
    Rat best_sq(0);
    Enumerator en(gs, {}, radius_sq, opts.max_nodes);
    en.run([&](const IntVec& x, const Rat& nsq) {
        if (!canonical_sign(x)) return;
        if (!have || nsq < best_sq || (nsq == best_sq && x < best_x)) {
            have = true;
            best_x = x;
            best_sq = nsq;
        }
    });
    if (!have) throw std::runtime_error("shortest_vector_bruteforce: empty ball");
    SvpResult res;
    res.coeffs = best_x;
    res.vec = combine(basis.cols, best_x);
    res.norm_sq = norm_sq(res.vec);
    return res;
}

SvpResult lambda1_bruteforce(const Basis& basis, const EnumOptions& opts) {
    if (basis.rank() == 0) throw std::invalid_argument("lambda1: empty basis");
    Int best = norm_sq(basis.cols[0]);
    for (const auto& c : basis.cols) best = std::min(best, norm_sq(c));
    return shortest_vector_bruteforce(basis, Rat(best), opts);
}

IntVec cvp_bruteforce(const Basis& basis, const RatVec& y, const EnumOptions& opts) {
    const std::size_t r = basis.rank();
    IntVec babai = babai_nearest(lll_reduce(basis), y);
    RatVec diff(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - Rat(babai[i]);
    Rat radius_sq = norm_sq(diff);

    // Gram-Schmidt projections of y onto the basis; the residual component
    // perpendicular to the span is a constant norm offset (zero for square
    // bases)
    GsData gs = gs_from_gram(gram_of_cols(basis.cols));
    RatVec target(r);
    Rat perp_sq = norm_sq(y);
    for (std::size_t j = 0; j < r; ++j) {
        RatVec col(basis.cols[j].size());
        for (std::size_t t = 0; t < col.size(); ++t) col[t] = Rat(basis.cols[j][t]);
        Rat acc = dot(y, col);
        for (std::size_t k = 0; k < j; ++k) acc -= target[k] * gs.mu[j][k] * gs.d[k];
        target[j] = acc / gs.d[j];
        perp_sq -= target[j] * target[j] * gs.d[j];
    }
    if (perp_sq < 0) perp_sq = 0;  // exact arithmetic keeps this at >= 0 already

    if (radius_sq < perp_sq) radius_sq = perp_sq;
    Rat budget = radius_sq - perp_sq;

    bool have = false;
    IntVec best_x;
    Rat best_sq(0);
    Enumerator en(gs, target, budget, opts.max_nodes);
    en.run([&](const IntVec& x, const Rat& nsq) {
        if (!have || nsq < best_sq || (nsq == best_sq && x < best_x)) {
            have = true;
            best_x = x;
            best_sq = nsq;
        }
    });
    if (!have) throw std::runtime_error("cvp_bruteforce: empty ball (unexpected)");
    return combine(basis.cols, best_x);
}

std::vector<RatVec> EmbeddedBasis::gram() const {
    const std::size_t m = B.rank();
    std::vector<RatVec> g(m + 1, RatVec(m + 1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            g[i][j] = Rat(dot(B.cols[i], B.cols[j]));
            g[j][i] = g[i][j];
        }
    for (std::size_t j = 0; j < m; ++j) {
        g[m][j] = Rat(dot(v, B.cols[j]));
        g[j][m] = g[m][j];
    }
    g[m][m] = Rat(norm_sq(v)) + eta.sq;
    return g;
}

EmbeddedBasis embed(const Basis& B, const IntVec& v, const SqrtVal& eta) {
    if (v.size() != B.dim()) throw std::invalid_argument("embed: dim(v) != dim(B)");
    if (eta.sq <= 0) throw std::invalid_argument("embed: eta must be positive");
    return EmbeddedBasis{B, v, eta};
}

std::vector<SqrtVal> eta_candidates(const Rat& d_sq, int n) {
    if (d_sq <= 0) throw std::invalid_argument("eta_candidates: d must be positive");
    if (n < 1) throw std::invalid_argument("eta_candidates: n must be >= 1");
    const double i_max_d = n * std::log(2.0) / std::log1p(1.0 / n);
    const long i_max = std::min<long>(static_cast<long>(std::floor(i_max_d)), 4096);
    Rat ratio_sq = make_rat(Int(n) * Int(n), Int(n + 1) * Int(n + 1));
    std::vector<SqrtVal> out;
    Rat cur = d_sq;
    for (long i = 0; i <= i_max; ++i) {
        out.push_back(SqrtVal::from_square(cur));
        cur *= ratio_sq;
    }
    return out;
}

EtaSelection select_eta_verification(const Rat& d_sq, int n, const Rat& e_norm_sq) {
    if (e_norm_sq <= 0)
        throw std::invalid_argument("select_eta: zero error norm (use degenerate_eta)");
    if (d_sq <= 0) throw std::invalid_argument("select_eta: d must be positive");
    // window [(1-1/n)|e|, (1+1/n)|e|), half-open at the top so the grid point
    // that lands exactly on the upper edge is skipped
    Rat lo_sq = make_rat(Int(n - 1) * Int(n - 1), Int(n) * Int(n)) * e_norm_sq;
    Rat hi_sq = make_rat(Int(n + 1) * Int(n + 1), Int(n) * Int(n)) * e_norm_sq;
    Rat ratio_sq = make_rat(Int(n) * Int(n), Int(n + 1) * Int(n + 1));
    const double i_max_d = n * std::log(2.0) / std::log1p(1.0 / n);
    const long i_max = std::min<long>(static_cast<long>(std::floor(i_max_d)), 1 << 20);

    Rat cur = d_sq;
    for (long i = 0; i <= i_max; ++i) {
        if (cur >= lo_sq && cur < hi_sq) return EtaSelection{SqrtVal::from_square(cur), i};
        cur *= ratio_sq;
    }
    throw std::runtime_error("select_eta: no i in range satisfies the sandwich");
}

SqrtVal degenerate_eta(const SqrtVal& T_eff, int m) {
    if (T_eff.sq <= 0) throw std::invalid_argument("degenerate_eta: T must be positive");
    return SqrtVal::from_square(T_eff.sq / Rat(8 * (m + 1)));
}

GapReport check_gap_property(const EmbeddedBasis& eb, const TargetVector& target,
                             const SqrtVal& T_eff, const Rat& radius_sq,
                             const EnumOptions& opts) {
    const std::size_t m = eb.B.rank();
    if (target.alpha.size() != m) throw std::invalid_argument("check_gap_property: bad alpha");

    GapReport report;
    report.lambda1_sq = T_eff.sq;
    Rat threshold_sq = T_eff.sq / 2;
    Rat radius = radius_sq;
    if (radius < threshold_sq) radius = threshold_sq;  // cover the full claim

    std::vector<IntVec> pts = enumerate_coeffs(eb.gram(), radius, opts);
    report.enumerated = static_cast<long>(pts.size());
    for (const IntVec& c : pts) {
        const Int& k = c[m];
        bool multiple = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (c[i] != -k * target.alpha[i]) {
                multiple = false;
                break;
            }
        }
        if (multiple && k == 0) multiple = false;  // nonzero vector with k = 0 is never a multiple
        if (multiple) continue;

        // exact squared norm via the Gram form
        IntVec head(eb.B.dim(), Int(0));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < head.size(); ++i) head[i] += c[j] * eb.B.cols[j][i];
        for (std::size_t i = 0; i < head.size(); ++i) head[i] += k * eb.v[i];
        Rat nsq = Rat(norm_sq(head)) + Rat(k * k) * eb.eta.sq;
        if (nsq <= threshold_sq) report.violations.push_back(GapViolation{c, nsq});
    }
    return report;
}

bool lattice_premise_holds(const Int& q, int n, int m) {
    if (m <= 0) return false;
    const double w = 1.024e-4;
    const double threshold = std::sqrt(M_PI * std::exp(1.0 + 2.0 * w));
    const double lhs = std::pow(to_double(q), 1.0 - static_cast<double>(n) / m);
    return lhs > threshold;
}

}  // namespace lwedcp
