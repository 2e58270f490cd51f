#include "lwedcp/serialize.hpp"

#include <json.hpp>

namespace lwedcp {

using nlohmann::json;

namespace {

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_dec(x));
    return a;
}

IntVec vec_from_json(const json& a) {
    IntVec v;
    v.reserve(a.size());
    for (const auto& x : a) v.push_back(int_from_dec(x.get<std::string>()));
    return v;
}

json mat_to_json(const IntMat& m) {
    json a = json::array();
    for (const IntVec& row : m) a.push_back(vec_to_json(row));
    return a;
}

IntMat mat_from_json(const json& a) {
    IntMat m;
    m.reserve(a.size());
    for (const auto& row : a) m.push_back(vec_from_json(row));
    return m;
}

}  // namespace

std::string to_json(const ReductionParams& p) {
    json j;
    j["n"] = p.n;
    j["q"] = to_dec(p.q);
    j["m"] = p.m;
    j["M"] = to_dec(p.M);
    j["sigma"] = p.sigma;
    j["alpha"] = p.alpha;
    j["epsilon"] = p.epsilon;
    j["delta"] = p.delta;
    j["A_coeff"] = p.A_coeff;
    j["T"] = p.T;
    j["R"] = to_dec(p.R);
    return j.dump(2) + "\n";
}

ReductionParams params_from_json(const std::string& text) {
    json j = json::parse(text);
    ReductionParams p;
    p.n = j.at("n").get<int>();
    p.q = int_from_dec(j.at("q").get<std::string>());
    p.m = j.at("m").get<int>();
    p.M = int_from_dec(j.at("M").get<std::string>());
    p.sigma = j.at("sigma").get<double>();
    p.alpha = j.at("alpha").get<double>();
    p.epsilon = j.at("epsilon").get<double>();
    p.delta = j.at("delta").get<double>();
    p.A_coeff = j.at("A_coeff").get<double>();
    p.T = j.at("T").get<double>();
    p.R = int_from_dec(j.at("R").get<std::string>());
    p.validate();
    return p;
}

std::string to_json(const LweInstance& inst) {
    json j;
    j["n"] = inst.n;
    j["q"] = to_dec(inst.q);
    j["m"] = inst.m;
    j["A"] = mat_to_json(inst.A);
    j["s"] = vec_to_json(inst.s);
    j["e"] = vec_to_json(inst.e);
    j["v"] = vec_to_json(inst.v);
    j["seed"] = std::to_string(inst.seed);
    return j.dump(2) + "\n";
}

LweInstance instance_from_json(const std::string& text) {
    json j = json::parse(text);
    LweInstance inst;
    inst.n = j.at("n").get<int>();
    inst.q = int_from_dec(j.at("q").get<std::string>());
    inst.m = j.at("m").get<int>();
    inst.A = mat_from_json(j.at("A"));
    inst.s = vec_from_json(j.at("s"));
    inst.e = vec_from_json(j.at("e"));
    inst.v = vec_from_json(j.at("v"));
    inst.seed = std::stoull(j.at("seed").get<std::string>());
    return inst;
}

std::string to_json(const Basis& basis) {
    json j;
    j["columns"] = json::array();
    for (const IntVec& col : basis.cols) j["columns"].push_back(vec_to_json(col));
    return j.dump(2) + "\n";
}

Basis basis_from_json(const std::string& text) {
    json j = json::parse(text);
    Basis b;
    for (const auto& col : j.at("columns")) b.cols.push_back(vec_from_json(col));
    return b;
}

std::string record_to_json_line(const TwoPointRecord& rec) {
    json j;
    j["a"] = vec_to_json(rec.a);
    j["a_prime"] = vec_to_json(rec.a_prime);
    j["singleton"] = rec.singleton;
    j["t"] = rec.t_measured;
    j["cell"] = vec_to_json(rec.cell.r);
    j["w_seed"] = std::to_string(rec.w_seed);
    return j.dump();
}

TwoPointRecord record_from_json_line(const std::string& line) {
    json j = json::parse(line);
    TwoPointRecord rec;
    rec.a = vec_from_json(j.at("a"));
    rec.a_prime = vec_from_json(j.at("a_prime"));
    rec.singleton = j.at("singleton").get<bool>();
    rec.t_measured = j.at("t").get<int>();
    rec.cell.r = vec_from_json(j.at("cell"));
    rec.w_seed = std::stoull(j.at("w_seed").get<std::string>());
    return rec;
}

std::string sample_to_json_line(const DcpSample& s) {
    json j;
    j["x"] = to_dec(s.x);
    j["y"] = to_dec(s.y);
    j["R"] = to_dec(s.R);
    j["m"] = s.m;
    j["valid"] = s.valid;
    return j.dump();
}

DcpSample sample_from_json_line(const std::string& line) {
    json j = json::parse(line);
    DcpSample s;
    s.x = int_from_dec(j.at("x").get<std::string>());
    s.y = int_from_dec(j.at("y").get<std::string>());
    s.R = int_from_dec(j.at("R").get<std::string>());
    s.m = j.at("m").get<int>();
    s.valid = j.at("valid").get<bool>();
    return s;
}

std::string to_json(const SolveReport& rep) {
    json j;
    j["alpha_recovered"] = vec_to_json(rep.alpha_recovered);
    j["sign"] = rep.sign;
    j["s_recovered"] = vec_to_json(rep.s_recovered);
    j["recovered"] = rep.recovered;
    j["matched"] = rep.matched;
    j["sign_anomaly"] = rep.sign_anomaly;
    j["residual_norm"] = rep.residual_norm;
    return j.dump(2) + "\n";
}

}  // namespace lwedcp
