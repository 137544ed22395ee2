#include "cdmc/report_io.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cdmc/errors.hpp"

namespace cdmc {

namespace {

using nlohmann::json;

json vec_to_json(const Eigen::VectorXd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

Eigen::VectorXd vec_from_json(const json& a) {
    Eigen::VectorXd v(a.size());
    Eigen::Index i = 0;
    for (const auto& x : a) {
        // JSON has no infinity literal; the writer emits null for the
        // +inf beta of the penalty-free dual
        v(i++) = x.is_null() ? std::numeric_limits<double>::infinity()
                             : x.get<double>();
    }
    return v;
}

json policy_to_json(const PerturbationPolicy& p) {
    return json{{"alpha_mode", to_string(p.alpha_mode)},
                {"alpha_slack", p.alpha_slack},
                {"beta_mode", to_string(p.beta_mode)},
                {"beta_scale", p.beta_scale},
                {"linear_magnitude", p.linear_magnitude},
                {"rng_seed", p.rng_seed},
                {"epsilon", p.epsilon},
                {"tau", p.tau},
                {"max_iters", p.max_iters},
                {"oracle_limit", p.oracle_limit}};
}

PerturbationPolicy policy_from_json(const json& j) {
    PerturbationPolicy p;
    p.alpha_mode = alpha_mode_from_string(j.at("alpha_mode").get<std::string>());
    p.alpha_slack = j.at("alpha_slack").get<double>();
    p.beta_mode = beta_mode_from_string(j.at("beta_mode").get<std::string>());
    p.beta_scale = j.at("beta_scale").get<double>();
    p.linear_magnitude = j.at("linear_magnitude").get<double>();
    p.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    p.epsilon = j.at("epsilon").get<double>();
    p.tau = j.at("tau").get<double>();
    p.max_iters = j.at("max_iters").get<int>();
    p.oracle_limit = j.at("oracle_limit").get<int>();
    return p;
}

json record_to_json(const RunRecord& rec) {
    json j{{"instance", rec.instance}, {"algorithm", rec.algorithm}, {"ok", rec.ok}};
    if (!rec.ok) {
        j["error"] = rec.error;
        return j;
    }
    const SolveReport& r = rec.report;
    j["cut_weight"] = r.solution.cut_weight;
    j["primal_value"] = r.solution.primal_value;
    j["x"] = vec_to_json(r.solution.x);
    j["certified_global"] = r.solution.certified_global;
    j["certificate"] = json{{"neg_definite", r.certificate.neg_definite},
                            {"gradient_small", r.certificate.gradient_small},
                            {"sigma_feasible", r.certificate.sigma_feasible},
                            {"rounding_tight", r.certificate.rounding_tight},
                            {"exhaustive", r.certificate.exhaustive}};
    j["iterations_total"] = r.iterations_total;
    j["reductions"] = r.reductions;
    j["compensation_passes"] = r.compensation_passes;
    j["wall_time_seconds"] = r.wall_time_seconds;
    j["termination"] = to_string(r.first_termination);
    j["policy"] = policy_to_json(r.policy);
    j["config"] = json{{"alpha", vec_to_json(r.config.alpha)},
                       {"beta", vec_to_json(r.config.beta)},
                       {"delta_c", vec_to_json(r.config.delta_c)},
                       {"epsilon", r.config.epsilon},
                       {"tau", r.config.tau},
                       {"max_iters", r.config.max_iters}};
    return j;
}

Termination termination_from_string(const std::string& s) {
    if (s == "gradient_norm") return Termination::GradientNorm;
    if (s == "x_stagnation") return Termination::XStagnation;
    if (s == "sigma_stagnation") return Termination::SigmaStagnation;
    if (s == "max_iterations") return Termination::MaxIterations;
    throw InputError("unknown termination: " + s);
}

RunRecord record_from_json(const json& j) {
    RunRecord rec;
    rec.instance = j.at("instance").get<std::string>();
    rec.algorithm = j.at("algorithm").get<std::string>();
    rec.ok = j.at("ok").get<bool>();
    if (!rec.ok) {
        rec.error = j.value("error", "");
        return rec;
    }
    SolveReport& r = rec.report;
    r.instance_name = rec.instance;
    r.algorithm = algorithm_from_string(rec.algorithm);
    r.solution.algorithm = r.algorithm;
    r.solution.cut_weight = j.at("cut_weight").get<double>();
    r.solution.primal_value = j.at("primal_value").get<double>();
    r.solution.x = vec_from_json(j.at("x"));
    r.solution.certified_global = j.at("certified_global").get<bool>();
    const json& cert = j.at("certificate");
    r.certificate.neg_definite = cert.at("neg_definite").get<bool>();
    r.certificate.gradient_small = cert.at("gradient_small").get<bool>();
    r.certificate.sigma_feasible = cert.at("sigma_feasible").get<bool>();
    r.certificate.rounding_tight = cert.at("rounding_tight").get<bool>();
    r.certificate.exhaustive = cert.at("exhaustive").get<bool>();
    r.iterations_total = j.at("iterations_total").get<int>();
    r.reductions = j.at("reductions").get<int>();
    r.compensation_passes = j.at("compensation_passes").get<int>();
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    r.first_termination = termination_from_string(j.at("termination").get<std::string>());
    r.policy = policy_from_json(j.at("policy"));
    const json& cfg = j.at("config");
    r.config.alpha = vec_from_json(cfg.at("alpha"));
    r.config.beta = vec_from_json(cfg.at("beta"));
    r.config.delta_c = vec_from_json(cfg.at("delta_c"));
    r.config.epsilon = cfg.at("epsilon").get<double>();
    r.config.tau = cfg.at("tau").get<double>();
    r.config.max_iters = cfg.at("max_iters").get<int>();
    return rec;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string fmt_double(double v) {
    std::ostringstream ss;
    ss << std::setprecision(17) << v;
    return ss.str();
}

} // namespace

std::string reports_to_json(const std::vector<RunRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    return arr.dump(2) + "\n";
}

std::vector<RunRecord> parse_reports_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
    }
    std::vector<RunRecord> records;
    for (const auto& j : arr) records.push_back(record_from_json(j));
    return records;
}

std::string reports_to_csv(const std::vector<RunRecord>& records, bool include_timing) {
    std::ostringstream out;
    out << "instance,algorithm,ok,error,cut_weight,primal_value,certified_global,"
           "certificate,iterations_total,reductions,compensation_passes,"
           "wall_time_seconds,termination,alpha_mode,alpha_slack,beta_mode,"
           "beta_scale,linear_magnitude,rng_seed,epsilon,tau,max_iters\n";
    for (const auto& rec : records) {
        out << csv_escape(rec.instance) << "," << rec.algorithm << ","
            << (rec.ok ? "1" : "0") << "," << csv_escape(rec.error) << ",";
        if (rec.ok) {
            const SolveReport& r = rec.report;
            out << fmt_double(r.solution.cut_weight) << ","
                << fmt_double(r.solution.primal_value) << ","
                << (r.solution.certified_global ? "1" : "0") << ","
                << r.certificate.reasons() << "," << r.iterations_total << ","
                << r.reductions << "," << r.compensation_passes << ","
                << fmt_double(include_timing ? r.wall_time_seconds : 0.0) << ","
                << to_string(r.first_termination) << ","
                << to_string(r.policy.alpha_mode) << "," << fmt_double(r.policy.alpha_slack)
                << "," << to_string(r.policy.beta_mode) << ","
                << fmt_double(r.policy.beta_scale) << ","
                << fmt_double(r.policy.linear_magnitude) << "," << r.policy.rng_seed << ","
                << fmt_double(r.policy.epsilon) << "," << fmt_double(r.policy.tau) << ","
                << r.policy.max_iters;
        } else {
            out << ",,,,,,,,,,,,,,,,,";
        }
        out << "\n";
    }
    return out.str();
}

std::string reports_to_table(const std::vector<RunRecord>& records) {
    std::ostringstream out;
    out << std::left << std::setw(14) << "instance" << std::setw(8) << "alg"
        << std::right << std::setw(14) << "cut" << std::setw(7) << "cert"
        << std::setw(8) << "iters" << std::setw(6) << "red" << std::setw(10)
        << "time_s" << "\n";
    for (const auto& rec : records) {
        out << std::left << std::setw(14) << rec.instance << std::setw(8)
            << rec.algorithm;
        if (rec.ok) {
            const SolveReport& r = rec.report;
            out << std::right << std::setw(14) << std::fixed << std::setprecision(0)
                << r.solution.cut_weight << std::setw(7)
                << (r.solution.certified_global ? "yes" : "no") << std::setw(8)
                << r.iterations_total << std::setw(6) << r.reductions << std::setw(10)
                << std::setprecision(3) << r.wall_time_seconds;
            out.unsetf(std::ios::fixed);
        } else {
            out << "  error: " << rec.error;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace cdmc
