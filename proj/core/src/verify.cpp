#include "lwedcp/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

#include "lwedcp/rng.hpp"
#include "lwedcp/sampling.hpp"

namespace lwedcp {

using nlohmann::json;

PreparedInstance prepare_from_instance(const ReductionParams& params, const LweInstance& inst,
                                       const std::string& t_policy, const EnumOptions& opts,
                                       const SqrtVal* forced_eta) {
    PreparedInstance out;
    out.params = params;
    out.instance = inst;

    Basis q_basis = qary_basis(out.instance.A, params.q);
    out.reduced = lll_reduce(q_basis);
    out.lambda1 = SqrtVal::from_square(Rat(lambda1_bruteforce(out.reduced, opts).norm_sq));

    if (t_policy == "lambda1") {
        out.T_eff = out.lambda1;
    } else if (t_policy == "claimed") {
        out.T_eff = SqrtVal::from_square(Rat(params.q * params.q));
    } else {
        throw std::invalid_argument("unknown T policy: " + t_policy);
    }

    // Babai-reduce v so the hidden coefficients stay within desk-scale M
    RatVec y(out.instance.v.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = Rat(out.instance.v[i]);
    out.translation = babai_nearest(out.reduced, y);
    out.v_red = sub(out.instance.v, out.translation);

    IntVec u_red = sub(out.v_red, out.instance.e);
    IntVec alpha = integral_coefficients(out.reduced, u_red);

    Rat d_sq = Rat(norm_sq(out.v_red));
    Rat e_sq = Rat(norm_sq(out.instance.e));
    SqrtVal eta;
    if (forced_eta != nullptr) {
        eta = *forced_eta;
        out.eta_index = -1;
    } else if (d_sq == 0) {
        eta = degenerate_eta(out.T_eff, params.m);
        out.eta_index = -1;
    } else {
        EtaSelection sel = select_eta_verification(d_sq, params.n, e_sq);
        eta = sel.eta;
        out.eta_index = sel.i0;
    }

    out.eb = embed(out.reduced, out.v_red, eta);
    out.target = TargetVector{out.instance.e, eta, alpha};
    out.premise = lattice_premise_holds(params.q, params.n, params.m);
    return out;
}

namespace {

double three_sigma(double rate, long trials) {
    double p = std::min(std::max(rate, 1e-9), 1.0 - 1e-9);
    return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace

PreparedInstance prepare_instance(const ReductionParams& params, std::uint64_t gen_seed,
                                  const std::string& t_policy, const EnumOptions& opts) {
    return prepare_from_instance(params, gen_lwe_instance(params, gen_seed), t_policy, opts);
}

GapVerifyReport verify_theorem1(int instances, std::uint64_t seed, long budget) {
    const int ms[] = {3, 4, 5};
    const char* qs[] = {"31", "61", "97"};
    EnumOptions opts;
    opts.max_nodes = budget;

    GapVerifyReport report;
    for (int i = 0; i < instances; ++i) {
        Overrides ov;
        ov["m"] = std::to_string(ms[i % 3]);
        ov["q"] = qs[(i / 3) % 3];
        ReductionParams params = derive_params(2, ov);
        std::uint64_t inst_seed = derive_seed(seed, "theorem1/" + std::to_string(i));
        PreparedInstance prep = prepare_instance(params, inst_seed, "lambda1", opts);

        Rat radius_sq = 4 * prep.target.w_norm_sq();
        GapReport gap = check_gap_property(prep.eb, prep.target, prep.T_eff, radius_sq, opts);

        GapInstanceResult row;
        row.seed = inst_seed;
        row.m = params.m;
        row.q = to_dec(params.q);
        row.lambda1 = prep.lambda1.approx();
        row.T_claimed = to_double(params.q);
        row.premise = prep.premise;
        row.enumerated = gap.enumerated;
        for (const auto& viol : gap.violations) {
            std::string coeffs = "(";
            for (std::size_t k = 0; k < viol.coeffs.size(); ++k) {
                if (k) coeffs += ",";
                coeffs += to_dec(viol.coeffs[k]);
            }
            coeffs += ")";
            row.violations.emplace_back(coeffs, std::sqrt(to_double(viol.norm_sq)));
        }
        report.instances.push_back(row);

        report.violations_total += static_cast<long>(row.violations.size());
        if (row.premise)
            report.violations_on_premise_instances += static_cast<long>(row.violations.size());
    }
    report.pass = report.violations_on_premise_instances == 0;
    return report;
}

CollisionVerifyReport verify_theorem2(int instances, std::uint64_t seed, const Int& domain_cap) {
    struct Cfg {
        int m;
        const char* M;
        const char* q;
    };
    const Cfg cfgs[] = {{3, "16", "31"}, {3, "16", "61"}, {3, "16", "97"},
                        {4, "8", "31"},  {4, "8", "61"},  {4, "8", "97"}};

    CollisionVerifyReport report;
    for (int i = 0; i < instances; ++i) {
        const Cfg& c = cfgs[i % 6];
        Overrides ov;
        ov["m"] = std::to_string(c.m);
        ov["M"] = c.M;
        ov["q"] = c.q;
        ReductionParams params = derive_params(2, ov);
        std::uint64_t inst_seed = derive_seed(seed, "theorem2/" + std::to_string(i));
        PreparedInstance prep = prepare_instance(params, inst_seed);

        CellOffsets w = CellOffsets::draw(static_cast<std::size_t>(params.m) + 1,
                                          derive_seed(inst_seed, "offsets"));
        CollisionClasses classes =
            collision_classes(prep.eb, w, prep.T_eff, params.M, domain_cap);

        ++report.instances;
        for (const auto& [label, members] : classes) {
            ++report.classes_total;
            if (members.size() > 2) {
                ++report.violations;
                continue;
            }
            if (members.size() == 2) {
                ++report.paired_classes;
                const auto& [t0, h0] = members[0];
                const auto& [t1, h1] = members[1];
                if (t0 + t1 != 1) {
                    ++report.violations;
                    continue;
                }
                const IntVec& zero_side = (t0 == 0) ? h0 : h1;
                const IntVec& one_side = (t0 == 0) ? h1 : h0;
                IntVec diff = sub(zero_side, one_side);
                bool plus = true, minus = true;
                for (std::size_t k = 0; k < diff.size(); ++k) {
                    if (diff[k] != prep.target.alpha[k]) plus = false;
                    if (diff[k] != -prep.target.alpha[k]) minus = false;
                }
                if (!plus && !minus) ++report.violations;
            }
        }
    }
    report.pass = report.violations == 0;
    return report;
}

PairingVerifyReport verify_theorem3(long trials, std::uint64_t seed) {
    Overrides ov;
    ov["m"] = "5";
    ov["M"] = "16";
    ov["q"] = "1009";
    ReductionParams params = derive_params(2, ov);
    PreparedInstance prep = prepare_instance(params, derive_seed(seed, "theorem3/instance"));

    Rng rng(derive_seed(seed, "theorem3/trials"));
    long paired = 0;
    for (long t = 0; t < trials; ++t) {
        TwoPointRecord rec =
            simulate_register(prep.eb, prep.target, params, prep.T_eff, rng.u64(), rng);
        if (!rec.singleton) ++paired;
    }

    PairingVerifyReport report;
    report.trials = trials;
    report.empirical_rate = static_cast<double>(paired) / static_cast<double>(trials);
    report.bound = pairing_bound_instance(prep.target, params.M, prep.T_eff);
    report.sigma_mc = three_sigma(report.bound, trials) / 3.0;
    report.pass = report.empirical_rate >= report.bound - 3.0 * report.sigma_mc;
    return report;
}

TailVerifyReport verify_tail(long draws, std::uint64_t seed) {
    const double s_params[] = {5.0, 10.0, 20.0};
    const double ds[] = {1.2, 1.5, 2.0};

    TailVerifyReport report;
    report.draws_per_row = draws;
    report.pass = true;
    for (double s : s_params) {
        Rng rng(derive_seed(seed, "tail/" + std::to_string(s)));
        std::vector<long> xs =
            sample_discrete_gaussian(static_cast<std::size_t>(draws), s, rng);
        for (double d : ds) {
            const double threshold = d * s / std::sqrt(2.0 * M_PI);
            long count = 0;
            for (long x : xs)
                if (std::abs(static_cast<double>(x)) >= threshold) ++count;
            TailRow row;
            row.s_param = s;
            row.d = d;
            row.empirical = static_cast<double>(count) / static_cast<double>(draws);
            row.bound = gaussian_tail_bound(d, 1);
            report.rows.push_back(row);
            if (row.empirical > row.bound) report.pass = false;
        }
    }
    return report;
}

Table1VerifyReport verify_table1() {
    struct Ref {
        int n;
        double deficit;
        double p_com;
    };
    const Ref refs[] = {{192, 6.68e-6, 0.1545},
                        {233, 3.94e-6, 0.1857},
                        {256, 3.05e-6, 0.2020},
                        {320, 1.66e-6, 0.2438}};

    Table1VerifyReport report;
    report.pass = true;
    for (const Ref& ref : refs) {
        ReductionParams p = derive_params(ref.n);
        Table1RowCheck row;
        row.n = ref.n;
        row.m = p.m;
        row.deficit = p_one_deficit(p);
        row.deficit_ref = ref.deficit;
        row.p_com = p_com(p);
        row.p_com_ref = ref.p_com;
        row.pass = std::abs(row.deficit - ref.deficit) <= 0.01 * ref.deficit &&
                   std::abs(row.p_com - ref.p_com) <= 5e-4;
        if (!row.pass) report.pass = false;
        report.rows.push_back(row);
    }
    return report;
}

// ---- JSON emitters -------------------------------------------------------

std::string GapVerifyReport::to_json_string() const {
    json j;
    j["pass"] = pass;
    j["violations_total"] = violations_total;
    j["violations_on_premise_instances"] = violations_on_premise_instances;
    j["instances"] = json::array();
    for (const auto& r : instances) {
        json e;
        e["seed"] = std::to_string(r.seed);
        e["m"] = r.m;
        e["q"] = r.q;
        e["lambda1"] = r.lambda1;
        e["T_claimed"] = r.T_claimed;
        e["lemma_premise"] = r.premise;
        e["enumerated"] = r.enumerated;
        e["violations"] = json::array();
        for (const auto& [coeffs, norm] : r.violations) {
            json v;
            v["coeffs"] = coeffs;
            v["norm"] = norm;
            e["violations"].push_back(v);
        }
        j["instances"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string CollisionVerifyReport::to_json_string() const {
    json j;
    j["pass"] = pass;
    j["instances"] = instances;
    j["classes_total"] = classes_total;
    j["paired_classes"] = paired_classes;
    j["violations"] = violations;
    return j.dump(2) + "\n";
}

std::string PairingVerifyReport::to_json_string() const {
    json j;
    j["pass"] = pass;
    j["trials"] = trials;
    j["empirical_rate"] = empirical_rate;
    j["bound"] = bound;
    j["sigma_mc"] = sigma_mc;
    return j.dump(2) + "\n";
}

std::string TailVerifyReport::to_json_string() const {
    json j;
    j["pass"] = pass;
    j["draws_per_row"] = draws_per_row;
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json e;
        e["s_param"] = r.s_param;
        e["d"] = r.d;
        e["empirical"] = r.empirical;
        e["bound"] = r.bound;
        j["rows"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string Table1VerifyReport::to_json_string() const {
    json j;
    j["pass"] = pass;
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json e;
        e["n"] = r.n;
        e["m"] = r.m;
        e["p_one_deficit"] = r.deficit;
        e["p_one_deficit_ref"] = r.deficit_ref;
        e["p_com"] = r.p_com;
        e["p_com_ref"] = r.p_com_ref;
        e["pass"] = r.pass;
        j["rows"].push_back(e);
    }
    return j.dump(2) + "\n";
}

}  // namespace lwedcp
