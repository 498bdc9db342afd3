#include "crdcache/json_io.hpp"

#include <fstream>
#include <set>

#include "crdcache/rational.hpp"

namespace crdcache {

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

int require_int(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        fail(Errc::parse_error, "missing or non-integer field '" + key + "'");
    }
    return j[key].get<int>();
}

std::vector<std::vector<int>> require_int_matrix(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array()) {
        fail(Errc::parse_error, "missing or non-array field '" + key + "'");
    }
    std::vector<std::vector<int>> out;
    for (const Json& row : j[key]) {
        if (!row.is_array()) fail(Errc::parse_error, "'" + key + "' must be an array of arrays");
        std::vector<int> values;
        for (const Json& cell : row) {
            if (!cell.is_number_integer()) {
                fail(Errc::parse_error, "'" + key + "' entries must be integers");
            }
            values.push_back(cell.get<int>());
        }
        out.push_back(std::move(values));
    }
    return out;
}

} // namespace

Json design_to_json(const Design& design) {
    Json j;
    j["v"] = design.v;
    j["blocks"] = design.blocks;
    return j;
}

Json resolution_to_json(const Resolution& res, const std::optional<ConstructionParams>& qary) {
    Json j = design_to_json(res.design);
    j["classes"] = res.classes;
    if (qary) {
        j["family"] = "qary";
        j["q"] = qary->q;
        j["m"] = qary->m;
        j["t"] = qary->t;
    }
    return j;
}

DesignDoc design_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::parse_error, "design document must be a JSON object");
    DesignDoc doc;
    const int v = require_int(j, "v");
    doc.design = validate_design(v, require_int_matrix(j, "blocks"));
    if (j.contains("classes")) {
        doc.classes = require_int_matrix(j, "classes");
    }
    if (j.contains("family")) {
        if (!j["family"].is_string() || j["family"].get<std::string>() != "qary") {
            fail(Errc::parse_error, "unknown design family");
        }
        ConstructionParams params;
        params.q = require_int(j, "q");
        params.m = require_int(j, "m");
        params.t = require_int(j, "t");
        doc.qary = params;
    }
    return doc;
}

Json profile_to_json(const Resolution& res, const CrdProfile& profile,
                     const MaximalPointCountCheck& check, const std::string& resolution_origin) {
    Json j;
    j["v"] = res.design.v;
    j["b"] = res.design.b();
    j["r"] = res.r();
    j["k"] = res.design.k;
    j["b_r"] = res.blocks_per_class();
    j["resolvable"] = true;
    Json mu = Json::object();
    for (const auto& [i, value] : profile.mu) mu[std::to_string(i)] = value;
    j["mu"] = mu;
    j["is_crd"] = profile.is_crd;
    j["is_maximal"] = profile.is_maximal;
    j["maximal_point_count"] = {{"applicable", check.applicable}, {"holds", check.holds}};
    j["resolution"] = resolution_origin;
    j["note"] = "cross intersection numbers describe this resolution only; other resolutions "
                "of the same design may differ";
    return j;
}

Json plan_to_json(const Topology& topo, const DemandVector& demands, const TransmissionPlan& plan,
                  const std::optional<ConstructionParams>& qary) {
    Json j;
    j["design"] = resolution_to_json(topo.res, qary);
    j["z"] = topo.z;
    j["mu_z"] = topo.mu_z;
    j["K"] = topo.K();
    j["F"] = topo.v();
    j["N"] = demands.N;
    j["demands"] = demands.demand;
    j["distinct"] = demands.distinct;
    j["rate"] = to_fraction_string(plan.rate());
    Json txs = Json::array();
    for (const Transmission& tx : plan.transmissions) {
        Json t;
        t["classes"] = tx.classes;
        Json pairs = Json::array();
        for (const auto& pair : tx.pairs) pairs.push_back({pair[0], pair[1]});
        t["pairs"] = pairs;
        t["slot"] = tx.slot;
        Json terms = Json::array();
        for (const Term& term : tx.terms) terms.push_back({term.user, term.file, term.point});
        t["terms"] = terms;
        txs.push_back(std::move(t));
    }
    j["transmissions"] = std::move(txs);
    return j;
}

PlanDoc plan_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::parse_error, "plan document must be a JSON object");
    if (!j.contains("design")) fail(Errc::parse_error, "plan document needs a 'design' field");
    DesignDoc design_doc = design_from_json(j["design"]);
    if (!design_doc.classes) fail(Errc::parse_error, "plan design needs 'classes'");

    PlanDoc doc;
    doc.res = validate_resolution(design_doc.design, *design_doc.classes);
    doc.qary = design_doc.qary;
    doc.z = require_int(j, "z");

    const int N = require_int(j, "N");
    if (N < 1) fail(Errc::parse_error, "N must be >= 1");
    if (!j.contains("demands") || !j["demands"].is_array()) {
        fail(Errc::parse_error, "missing 'demands' array");
    }
    std::vector<int> demand;
    for (const Json& cell : j["demands"]) {
        if (!cell.is_number_integer()) fail(Errc::parse_error, "'demands' must hold integers");
        const int file = cell.get<int>();
        if (file < 0 || file >= N) fail(Errc::parse_error, "demand outside [0, N)");
        demand.push_back(file);
    }
    std::set<int> unique(demand.begin(), demand.end());
    doc.demands.N = N;
    doc.demands.distinct = unique.size() == demand.size();
    doc.demands.demand = std::move(demand);

    doc.plan.v = doc.res.design.v;
    if (!j.contains("transmissions") || !j["transmissions"].is_array()) {
        fail(Errc::parse_error, "missing 'transmissions' array");
    }
    const int K = static_cast<int>(doc.demands.demand.size());
    for (const Json& t : j["transmissions"]) {
        Transmission tx;
        if (!t.is_object()) fail(Errc::parse_error, "transmissions must be objects");
        for (const Json& c : t.value("classes", Json::array())) {
            tx.classes.push_back(c.get<int>());
        }
        for (const Json& p : t.value("pairs", Json::array())) {
            if (!p.is_array() || p.size() != 2) fail(Errc::parse_error, "pairs must be [i, j]");
            tx.pairs.push_back({p[0].get<int>(), p[1].get<int>()});
        }
        tx.slot = t.value("slot", 0);
        if (!t.contains("terms") || !t["terms"].is_array()) {
            fail(Errc::parse_error, "transmission needs a 'terms' array");
        }
        for (const Json& term : t["terms"]) {
            if (!term.is_array() || term.size() != 3) {
                fail(Errc::parse_error, "terms must be [user, file, point]");
            }
            const int user = term[0].get<int>();
            const int file = term[1].get<int>();
            const int point = term[2].get<int>();
            if (user < 0 || user >= K) fail(Errc::parse_error, "term user outside [0, K)");
            if (file < 0 || file >= N) fail(Errc::parse_error, "term file outside [0, N)");
            if (point < 0 || point >= doc.plan.v) {
                fail(Errc::parse_error, "term point outside [0, v)");
            }
            tx.terms.push_back(Term{user, file, point});
        }
        doc.plan.transmissions.push_back(std::move(tx));
    }
    return doc;
}

Json report_to_json(const DecodeReport& report, bool distinct_demands) {
    Json j;
    j["all_decodable"] = report.all_decodable;
    j["one_shot"] = report.one_shot;
    j["rate_is_upper_bound"] = !distinct_demands;
    Json hist = Json::object();
    for (const auto& [gain, count] : report.gain_histogram) hist[std::to_string(gain)] = count;
    j["gain_histogram"] = hist;
    j["failures"] = report.failures;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io_error, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail(Errc::parse_error, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(Errc::io_error, "failed writing " + path);
}

} // namespace crdcache
