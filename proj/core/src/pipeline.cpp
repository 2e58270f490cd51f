#include "lwedcp/pipeline.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lwedcp/rng.hpp"

namespace lwedcp {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
}

json rat_to_json(const Rat& r) {
    json j;
    j["num"] = Int(mpq_numref(r.get_mpq_t())).get_str(10);
    j["den"] = Int(mpq_denref(r.get_mpq_t())).get_str(10);
    return j;
}

Rat rat_from_json(const json& j) {
    return make_rat(int_from_dec(j.at("num").get<std::string>()),
                    int_from_dec(j.at("den").get<std::string>()));
}

json ivec_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_dec(x));
    return a;
}

IntVec ivec_from_json(const json& a) {
    IntVec v;
    for (const auto& x : a) v.push_back(int_from_dec(x.get<std::string>()));
    return v;
}

// lattice.json holds everything the later stages need from the front half.
std::string lattice_stage_to_json(const PreparedInstance& prep, const std::string& t_policy) {
    json j;
    json cols = json::array();
    for (const IntVec& c : prep.reduced.cols) cols.push_back(ivec_to_json(c));
    j["basis"] = {{"columns", cols}};
    j["lambda1_sq"] = rat_to_json(prep.lambda1.sq);
    j["T_policy"] = t_policy;
    j["T_eff_sq"] = rat_to_json(prep.T_eff.sq);
    j["T_claimed"] = to_double(prep.params.q);
    j["translation"] = ivec_to_json(prep.translation);
    j["v_red"] = ivec_to_json(prep.v_red);
    j["eta_sq"] = rat_to_json(prep.target.eta.sq);
    j["alpha"] = ivec_to_json(prep.target.alpha);
    j["eta_index"] = prep.eta_index;
    j["lemma_premise"] = prep.premise;
    return j.dump(2) + "\n";
}

PreparedInstance lattice_stage_from_json(const ReductionParams& params, const LweInstance& inst,
                                         const std::string& text) {
    json j = json::parse(text);
    PreparedInstance prep;
    prep.params = params;
    prep.instance = inst;
    for (const auto& c : j.at("basis").at("columns")) prep.reduced.cols.push_back(ivec_from_json(c));
    prep.lambda1 = SqrtVal::from_square(rat_from_json(j.at("lambda1_sq")));
    prep.T_eff = SqrtVal::from_square(rat_from_json(j.at("T_eff_sq")));
    prep.translation = ivec_from_json(j.at("translation"));
    prep.v_red = ivec_from_json(j.at("v_red"));
    SqrtVal eta = SqrtVal::from_square(rat_from_json(j.at("eta_sq")));
    prep.target = TargetVector{inst.e, eta, ivec_from_json(j.at("alpha"))};
    prep.eb = embed(prep.reduced, prep.v_red, eta);
    prep.eta_index = j.at("eta_index").get<long>();
    prep.premise = j.at("lemma_premise").get<bool>();
    return prep;
}

std::vector<DcpSample> dcp_samples_from_records(const TwoPointInput& input, const Int& R) {
    std::vector<DcpSample> samples;
    for (const auto& rec : input.records) {
        if (rec.singleton) continue;
        samples.push_back(map_to_dcp(rec, R));
    }
    return samples;
}

SolveReport solve_stage(const PreparedInstance& prep, const std::vector<DcpSample>& samples) {
    Int d = solve_dcp_stub(samples);
    IntVec alpha = digits_to_alpha(d, prep.params.R, prep.params.m);
    return recover_secret(alpha, 1, prep.reduced, prep.instance, prep.params,
                          &prep.translation);
}

bool canonical_equal_up_to_sign(const IntVec& a, const IntVec& b) {
    if (a == b) return true;
    IntVec neg(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
    return a == neg;
}

}  // namespace

ReductionOutcome run_reduction(const ReductionParams& params, std::uint64_t seed,
                               const std::string& t_policy, const std::string& eta_mode,
                               long records, long budget) {
    ReductionOutcome out;
    EnumOptions opts;
    opts.max_nodes = budget;

    LweInstance inst;
    try {
        inst = gen_lwe_instance(params, derive_seed(seed, "gen"));
    } catch (const std::exception& e) {
        out.failure = std::string("gen: ") + e.what();
        return out;
    }

    std::vector<SqrtVal> etas;
    try {
        PreparedInstance probe = prepare_from_instance(params, inst, t_policy, opts);
        if (eta_mode == "enumerate") {
            Rat d_sq = Rat(norm_sq(probe.v_red));
            if (d_sq == 0) {
                etas.push_back(degenerate_eta(probe.T_eff, params.m));
            } else {
                for (const SqrtVal& cand : eta_candidates(d_sq, params.n)) etas.push_back(cand);
            }
        } else if (eta_mode == "verify") {
            etas.push_back(probe.target.eta);
        } else {
            throw std::invalid_argument("unknown eta mode: " + eta_mode);
        }
        out.prep = probe;
    } catch (const std::exception& e) {
        out.failure = std::string("lattice: ") + e.what();
        return out;
    }

    std::string last_failure;
    for (std::size_t attempt = 0; attempt < etas.size(); ++attempt) {
        try {
            PreparedInstance prep =
                prepare_from_instance(params, inst, t_policy, opts, &etas[attempt]);
            Rng rng(derive_seed(seed, "two-point"));
            TwoPointInput input =
                build_two_point_input(prep.eb, prep.target, params, prep.T_eff, rng, records);

            validity_probability(params);  // surfaces R <= m q^2 as a dcp-stage error
            std::vector<DcpSample> samples = dcp_samples_from_records(input, params.R);
            long valid = 0;
            for (const auto& s : samples)
                if (s.valid) ++valid;

            SolveReport rep = solve_stage(prep, samples);
            out.prep = prep;
            out.two_point = input;
            out.samples = samples;
            out.solve = rep;
            out.valid_samples = valid;
            out.model_rate = register_pair_rate(prep.target, params.M, prep.T_eff);
            out.stages_ok = true;
            out.failure.clear();

            ExtractedDifference direct = extract_difference(input);
            IntVec alpha_canon = rep.alpha_recovered;
            out.difference_cross_check = canonical_equal_up_to_sign(direct.alpha, alpha_canon);
            if (rep.recovered) return out;  // enumeration mode: stop at the first passing eta
            last_failure = "solve: no sign choice passed the residual bound";
        } catch (const std::exception& e) {
            last_failure = e.what();
        }
    }
    if (!out.stages_ok) out.failure = last_failure;
    return out;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
    PipelineResult result;
    if (config.out_dir.empty())
        throw std::invalid_argument("run_pipeline: output directory required");
    std::filesystem::create_directories(config.out_dir);

    const auto params_file = config.out_dir / "params.json";
    const auto instance_file = config.out_dir / "instance.json";
    const auto lattice_file = config.out_dir / "lattice.json";
    const auto twopoint_file = config.out_dir / "twopoint.jsonl";
    const auto dcp_file = config.out_dir / "dcp.jsonl";
    const auto solve_file = config.out_dir / "solve.json";
    const auto report_file = config.out_dir / "report.json";

    EnumOptions opts;
    opts.max_nodes = config.budget;

    auto want = [&](const std::string& s) { return config.stage == "all" || config.stage == s; };
    auto fail = [&](const std::string& name, const std::string& what) {
        result.stages.push_back({name, false, what});
    };
    auto ok = [&](const std::string& name, const std::string& detail = "") {
        result.stages.push_back({name, true, detail});
    };

    ReductionParams params;
    try {
        params = derive_params(config.n, config.overrides);
    } catch (const std::exception& e) {
        fail("params", e.what());
        return result;
    }

    LweInstance inst;
    PreparedInstance prep;
    TwoPointInput input;
    std::vector<DcpSample> samples;
    bool have_inst = false, have_prep = false, have_input = false, have_samples = false;

    auto load_instance = [&]() {
        if (!have_inst) {
            inst = instance_from_json(read_file(instance_file));
            have_inst = true;
        }
    };
    auto load_prep = [&]() {
        load_instance();
        if (!have_prep) {
            prep = lattice_stage_from_json(params, inst, read_file(lattice_file));
            have_prep = true;
        }
    };
    auto load_input = [&]() {
        if (!have_input) {
            input.records.clear();
            input.m = params.m;
            input.M = params.M;
            std::istringstream lines(read_file(twopoint_file));
            std::string line;
            while (std::getline(lines, line))
                if (!line.empty()) input.records.push_back(record_from_json_line(line));
            have_input = true;
        }
    };

    if (want("gen")) {
        try {
            inst = gen_lwe_instance(params, derive_seed(config.seed, "gen"));
            have_inst = true;
            write_file(params_file, to_json(params));
            write_file(instance_file, to_json(inst));
            ok("gen", "m=" + std::to_string(params.m));
        } catch (const std::exception& e) {
            fail("gen", e.what());
            return result;
        }
    }

    if (want("lattice")) {
        try {
            load_instance();
            if (config.eta_mode == "enumerate") {
                // try candidates until the downstream chain succeeds; the
                // lattice file records the winning eta
                prep = prepare_from_instance(params, inst, config.t_policy, opts);
                Rat d_sq = Rat(norm_sq(prep.v_red));
                std::vector<SqrtVal> etas;
                if (d_sq == 0)
                    etas.push_back(degenerate_eta(prep.T_eff, params.m));
                else
                    etas = eta_candidates(d_sq, params.n);
                bool found = false;
                for (const SqrtVal& eta : etas) {
                    PreparedInstance cand =
                        prepare_from_instance(params, inst, config.t_policy, opts, &eta);
                    Rng rng(derive_seed(config.seed, "two-point"));
                    TwoPointInput probe = build_two_point_input(cand.eb, cand.target, params,
                                                                cand.T_eff, rng, config.records);
                    std::vector<DcpSample> probe_samples =
                        dcp_samples_from_records(probe, params.R);
                    bool any_valid = false;
                    for (const auto& s : probe_samples) any_valid |= s.valid;
                    if (!any_valid) continue;
                    SolveReport rep = solve_stage(cand, probe_samples);
                    if (rep.recovered) {
                        prep = cand;
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw std::runtime_error("eta enumeration: no candidate recovered a secret");
            } else {
                prep = prepare_from_instance(params, inst, config.t_policy, opts);
            }
            have_prep = true;
            write_file(lattice_file, lattice_stage_to_json(prep, config.t_policy));
            ok("lattice", "lambda1=" + std::to_string(prep.lambda1.approx()));
        } catch (const std::exception& e) {
            fail("lattice", e.what());
            return result;
        }
    }

    if (want("two-point")) {
        try {
            load_prep();
            Rng rng(derive_seed(config.seed, "two-point"));
            input = build_two_point_input(prep.eb, prep.target, params, prep.T_eff, rng,
                                          config.records);
            have_input = true;
            std::string out;
            for (const auto& rec : input.records) out += record_to_json_line(rec) + "\n";
            write_file(twopoint_file, out);
            ok("two-point", std::to_string(input.records.size() - input.singleton_count()) +
                                "/" + std::to_string(input.records.size()) + " paired");
        } catch (const std::exception& e) {
            fail("two-point", e.what());
            return result;
        }
    }

    if (want("dcp")) {
        try {
            load_input();
            validity_probability(params);  // R too small is a stage error
            samples = dcp_samples_from_records(input, params.R);
            have_samples = true;
            std::string out;
            for (const auto& s : samples) out += sample_to_json_line(s) + "\n";
            write_file(dcp_file, out);
            long valid = 0;
            for (const auto& s : samples)
                if (s.valid) ++valid;
            ok("dcp", std::to_string(valid) + "/" + std::to_string(samples.size()) + " valid");
        } catch (const std::exception& e) {
            fail("dcp", e.what());
            return result;
        }
    }

    if (want("solve")) {
        try {
            load_prep();
            if (!have_samples) {
                samples.clear();
                std::istringstream lines(read_file(dcp_file));
                std::string line;
                while (std::getline(lines, line))
                    if (!line.empty()) samples.push_back(sample_from_json_line(line));
            }
            SolveReport rep = solve_stage(prep, samples);
            write_file(solve_file, to_json(rep));
            result.matched = rep.matched;
            ok("solve", rep.matched ? "matched" : "not matched");
        } catch (const std::exception& e) {
            fail("solve", e.what());
            return result;
        }
    }

    json report;
    report["matched"] = result.matched;
    report["stage"] = config.stage;
    report["seed"] = std::to_string(config.seed);
    report["stages"] = json::array();
    for (const auto& s : result.stages)
        report["stages"].push_back({{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
    write_file(report_file, report.dump(2) + "\n");
    return result;
}

SolveReport solve_from_files(const std::filesystem::path& instance_file,
                             const std::filesystem::path& dcp_file,
                             const ReductionParams& params) {
    LweInstance inst = instance_from_json(read_file(instance_file));
    PreparedInstance prep = prepare_from_instance(params, inst);

    std::vector<DcpSample> samples;
    std::istringstream lines(read_file(dcp_file));
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) samples.push_back(sample_from_json_line(line));
    return solve_stage(prep, samples);
}

}  // namespace lwedcp
