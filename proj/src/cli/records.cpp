#include "quadpow/cli/records.hpp"

#include "quadpow/errors.hpp"

namespace quadpow::cli {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

ojson decimal_array(const std::vector<BigInt>& v) {
  ojson out = ojson::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

std::vector<BigInt> parse_decimal_array(const json& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + " must be an array of decimal strings");
  std::vector<BigInt> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw UsageError(std::string(what) + " entries must be decimal strings");
    out.push_back(parse_decimal(v.get<std::string>()));
  }
  return out;
}

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw UsageError(std::string("record is missing '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("record field '") + name + "' has the wrong type");
  }
}

}  // namespace

ojson to_json(const RingSpec& ring) {
  ojson out;
  out["kind"] = ring.kind;
  out["n"] = ring.n;
  if (ring.kind == "monomial") {
    ojson m = ojson::array();
    for (const auto& [i, j] : ring.pairs) m.push_back({i, j});
    out["M"] = m;
  } else if (ring.kind == "generic") {
    out["r"] = ring.r;
    out["prime"] = ring.prime;
    out["seed"] = ring.seed;
  } else {
    out["prime"] = ring.prime;
    out["generators"] = ring.generators;
  }
  return out;
}

RingSpec ring_from_json(const json& j) {
  RingSpec ring;
  ring.kind = field<std::string>(j, "kind");
  ring.n = field<unsigned>(j, "n");
  if (ring.kind == "monomial") {
    for (const auto& p : field<std::vector<std::vector<unsigned>>>(j, "M")) {
      if (p.size() != 2) throw UsageError("M entries must be pairs");
      ring.pairs.emplace_back(p[0], p[1]);
    }
  } else if (ring.kind == "generic") {
    ring.r = field<unsigned>(j, "r");
    ring.prime = field<std::uint64_t>(j, "prime");
    ring.seed = field<std::uint64_t>(j, "seed");
  } else if (ring.kind == "explicit") {
    ring.prime = field<std::uint64_t>(j, "prime");
    ring.generators = field<std::vector<std::string>>(j, "generators");
  } else {
    throw UsageError("unknown ring kind '" + ring.kind + "'");
  }
  return ring;
}

ojson to_json(const ResultRecord& record, bool with_timing) {
  ojson out;
  out["schema_version"] = kSchemaVersion;
  out["ring"] = to_json(record.ring);
  out["s"] = record.s;
  out["dims"] = decimal_array(record.dims);
  out["length"] = to_decimal(record.length);
  if (record.fit) {
    out["fit"] = {{"e", decimal_array(record.fit->e)}, {"s_onset", record.fit->s_onset}};
  }
  if (with_timing) out["timing"] = {{"seconds", record.seconds}, {"cached", record.cached}};
  return out;
}

ResultRecord record_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("record must be a JSON object");
  const int version = field<int>(j, "schema_version");
  if (version != kSchemaVersion) {
    throw UsageError("record schema version " + std::to_string(version) + ", expected " +
                     std::to_string(kSchemaVersion));
  }
  ResultRecord r;
  r.ring = ring_from_json(field<json>(j, "ring"));
  r.s = field<unsigned>(j, "s");
  r.dims = parse_decimal_array(field<json>(j, "dims"), "dims");
  r.length = parse_decimal(field<std::string>(j, "length"));
  if (j.contains("fit")) {
    const auto& f = j.at("fit");
    r.fit = FitSummary{parse_decimal_array(field<json>(f, "e"), "fit.e"), field<std::int64_t>(f, "s_onset")};
  }
  if (j.contains("timing")) {
    const auto& t = j.at("timing");
    r.seconds = field<double>(t, "seconds");
    r.cached = field<bool>(t, "cached");
  }
  return r;
}

std::string cache_key(const RingSpec& ring, unsigned s) {
  ojson key = to_json(ring);
  key["s"] = s;
  return key.dump();
}

}  // namespace quadpow::cli
