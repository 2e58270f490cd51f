#include "lwedcp/dcpsolve.hpp"

#include <cmath>
#include <stdexcept>

namespace lwedcp {

Int solve_dcp_stub(const std::vector<DcpSample>& samples) {
    bool have = false;
    Int magnitude = 0;
    long plus = 0, minus = 0;
    for (const auto& s : samples) {
        if (!s.valid) continue;
        Int d = s.x - s.y;
        Int mag = abs(d);
        if (!have) {
            magnitude = mag;
            have = true;
        } else if (mag != magnitude) {
            throw std::runtime_error("solve_dcp_stub: inconsistent differences across samples");
        }
        if (d > 0) ++plus;
        if (d < 0) ++minus;
    }
    if (!have) throw std::runtime_error("solve_dcp_stub: no valid samples");
    return (minus > plus) ? -magnitude : magnitude;
}

IntVec digits_to_alpha(const Int& d, const Int& R, int m) {
    if (m < 1) throw std::invalid_argument("digits_to_alpha: m must be >= 1");
    IntVec digits(static_cast<std::size_t>(m));
    Int rest = d;
    for (int i = 0; i < m; ++i) {
        Int r = mod_balanced(rest, R);
        digits[static_cast<std::size_t>(i)] = r;
        rest = (rest - r) / R;
    }
    if (rest != 0)
        throw std::runtime_error("digits_to_alpha: |d| too large for m balanced base-R digits");
    return digits;
}

IntVec solve_mod_q(const IntMat& A, const IntVec& u, const Int& q) {
    const std::size_t m = A.size();
    if (m == 0 || u.size() != m) throw std::invalid_argument("solve_mod_q: shape mismatch");
    const std::size_t n = A[0].size();

    // augmented [A | u], Gauss-Jordan mod q
    IntMat w(m, IntVec(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = mod_pos(A[i][j], q);
        w[i][n] = mod_pos(u[i], q);
    }

    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && w[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(w[piv], w[row]);
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), w[row][col].get_mpz_t(), q.get_mpz_t()) == 0)
            throw std::runtime_error("solve_mod_q: non-invertible pivot (q not prime?)");
        for (std::size_t j = col; j <= n; ++j) w[row][j] = mod_pos(w[row][j] * inv, q);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || w[i][col] == 0) continue;
            Int factor = w[i][col];
            for (std::size_t j = col; j <= n; ++j)
                w[i][j] = mod_pos(w[i][j] - factor * w[row][j], q);
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() < n)
        throw std::runtime_error("solve_mod_q: rank-deficient system");
    for (std::size_t i = row; i < m; ++i)
        if (w[i][n] != 0) throw std::runtime_error("solve_mod_q: inconsistent system");

    IntVec s(n, Int(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) s[pivot_col[r]] = w[r][n];
    return s;
}

SolveReport recover_secret(const IntVec& alpha, int sign, const Basis& B,
                           const LweInstance& instance, const ReductionParams& params,
                           const IntVec* translation) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("recover_secret: sign must be +-1");
    if (alpha.size() != B.rank()) throw std::invalid_argument("recover_secret: alpha length mismatch");

    const double bound = error_norm_bound(params);
    bool alpha_zero = true;
    for (const Int& x : alpha)
        if (x != 0) {
            alpha_zero = false;
            break;
        }

    struct Candidate {
        int sign;
        IntVec s;
        double resid;
        bool pass;
    };
    std::vector<Candidate> cands;
    for (int k = 0; k < (alpha_zero ? 1 : 2); ++k) {
        const int sgn_choice = (k == 0) ? sign : -sign;
        IntVec u(B.dim(), Int(0));
        for (std::size_t j = 0; j < B.rank(); ++j)
            for (std::size_t i = 0; i < u.size(); ++i) u[i] += sgn_choice * alpha[j] * B.cols[j][i];
        if (translation != nullptr)
            for (std::size_t i = 0; i < u.size(); ++i) u[i] += (*translation)[i];

        Candidate c;
        c.sign = sgn_choice;
        c.s = solve_mod_q(instance.A, u, instance.q);
        double rsq = 0;
        for (int i = 0; i < instance.m; ++i) {
            Int r = mod_balanced(instance.v[i] - u[static_cast<std::size_t>(i)], instance.q);
            rsq += to_double(r) * to_double(r);
        }
        c.resid = std::sqrt(rsq);
        c.pass = c.resid <= bound;
        cands.push_back(std::move(c));
    }

    SolveReport rep;
    const Candidate* chosen = nullptr;
    for (const auto& c : cands)
        if (c.pass && chosen == nullptr) chosen = &c;
    rep.sign_anomaly = cands.size() == 2 && cands[0].pass && cands[1].pass && cands[0].s != cands[1].s;
    if (chosen == nullptr) {
        // pipeline failure: report the closer miss, do not throw
        chosen = &cands[0];
        for (const auto& c : cands)
            if (c.resid < chosen->resid) chosen = &c;
        rep.recovered = false;
    } else {
        rep.recovered = true;
    }
    rep.alpha_recovered = alpha;
    rep.sign = rep.recovered ? chosen->sign : 0;
    rep.s_recovered = chosen->s;
    rep.residual_norm = chosen->resid;
    rep.matched = rep.recovered && chosen->s == instance.s;
    return rep;
}

}  // namespace lwedcp
