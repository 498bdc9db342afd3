#ifndef CRDCACHE_JSON_IO_HPP
#define CRDCACHE_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "crdcache/construct.hpp"
#include "crdcache/design.hpp"
#include "crdcache/scheme.hpp"
#include "crdcache/verify.hpp"

namespace crdcache {

// JSON (de)serialization with byte-deterministic output: key order is
// insertion order (nlohmann ordered_json) and dumps use 2-space indent,
// so identical inputs always produce identical bytes.

using Json = nlohmann::ordered_json;

std::string dump_json(const Json& j); // 2-space indent + trailing newline

// Design/Resolution documents:
//   {"v": int, "blocks": [[int,...],...], "classes": [[int,...],...]?}
// plus optional construction provenance {"family":"qary","q":..,"m":..,"t":..}.
struct DesignDoc {
    Design design;
    std::optional<std::vector<std::vector<int>>> classes;
    std::optional<ConstructionParams> qary; // present when family == "qary"
};

Json design_to_json(const Design& design);
Json resolution_to_json(const Resolution& res,
                        const std::optional<ConstructionParams>& qary = std::nullopt);
// Validates while parsing; throws Error (parse_error for malformed
// documents, the validators' codes for inconsistent content).
DesignDoc design_from_json(const Json& j);

// Profile document, as emitted by the profile command:
//   {"v","b","r","k","b_r","mu":{"2":...},"is_crd","is_maximal",
//    "maximal_point_count":{"applicable","holds"},"resolution":"given"|"derived",
//    "note": profile applies to this resolution only}
Json profile_to_json(const Resolution& res, const CrdProfile& profile,
                     const MaximalPointCountCheck& check, const std::string& resolution_origin);

// Plan bundle: everything verify needs to replay a scheme.
//   {"design":{...}, "z","K","F","N","seed"?,"demands":[...],"distinct":bool,
//    "rate":"p/q","transmissions":[{"classes":[...],"pairs":[[i,j],...],
//    "slot":l,"terms":[[user,file,point],...]},...]}
struct PlanDoc {
    Resolution res;
    std::optional<ConstructionParams> qary;
    int z = 0;
    DemandVector demands;
    TransmissionPlan plan;
};

Json plan_to_json(const Topology& topo, const DemandVector& demands,
                  const TransmissionPlan& plan,
                  const std::optional<ConstructionParams>& qary = std::nullopt);
// Parses and re-validates the embedded design/resolution; transmissions
// are taken as stored (so corrupted plans can be fed to the verifier).
PlanDoc plan_from_json(const Json& j);

// Report document:
//   {"all_decodable","one_shot","rate_is_upper_bound","gain_histogram":{...},
//    "failures":[...], "payload"?:{"seed","agrees"}}
Json report_to_json(const DecodeReport& report, bool distinct_demands);

// Reads/writes whole files; read throws parse_error on I/O or JSON
// failure. write_text is used for CSV too.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace crdcache

#endif
