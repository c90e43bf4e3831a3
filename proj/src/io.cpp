#include "scs/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace scs::io {

using nlohmann::json;

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_values(std::ostream& os, std::span<const Complex> values) {
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << '[' << format_real(values[i].real()) << ',' << format_real(values[i].imag()) << ']';
  }
  os << ']';
}

void write_sequence_object(std::ostream& os, const ComplexSeq& seq, std::optional<int> alphabet_order) {
  os << "{\"length\":" << seq.size() << ",\"domain\":\"" << to_string(seq.domain()) << "\",\"alphabet_order\":";
  if (alphabet_order)
    os << *alphabet_order;
  else
    os << "null";
  os << ",\"values\":";
  write_values(os, seq.values());
  os << '}';
}

json parse(std::istream& is) {
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

std::optional<int> optional_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<int>(j, key);
}

ComplexSeq sequence_from_json(const json& j) {
  const auto length = field<std::size_t>(j, "length");
  const auto domain_name = field<std::string>(j, "domain");
  Domain domain;
  if (domain_name == "time")
    domain = Domain::time;
  else if (domain_name == "frequency")
    domain = Domain::frequency;
  else
    throw FormatError("domain must be \"time\" or \"frequency\"");
  const auto raw = field<std::vector<std::vector<double>>>(j, "values");
  if (raw.size() != length) throw FormatError("values array does not match length");
  std::vector<Complex> values;
  values.reserve(raw.size());
  for (const auto& v : raw) {
    if (v.size() != 2) throw FormatError("each value must be a [re, im] pair");
    values.emplace_back(v[0], v[1]);
  }
  try {
    return ComplexSeq(domain, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

json info_to_json(const ConstructionInfo& info) {
  json j;
  j["construction"] = info.name;
  j["N"] = info.order;
  j["insert_set"] = info.insert_set;
  j["s0"] = info.s0 ? json(*info.s0) : json(nullptr);
  j["cfr_fingerprint"] = info.cfr_fingerprint;
  j["H"] = info.h_descriptor.empty() ? json(nullptr) : json(info.h_descriptor);
  return j;
}

ConstructionInfo info_from_json(const json& j) {
  ConstructionInfo info;
  info.name = field<std::string>(j, "construction");
  info.order = field<int>(j, "N");
  info.insert_set = field<std::vector<int>>(j, "insert_set");
  info.s0 = optional_int(j, "s0");
  info.cfr_fingerprint = field<std::string>(j, "cfr_fingerprint");
  if (j.contains("H") && !j.at("H").is_null()) info.h_descriptor = field<std::string>(j, "H");
  return info;
}

}  // namespace

void write_sequence(std::ostream& os, const ComplexSeq& seq, std::optional<int> alphabet_order) {
  write_sequence_object(os, seq, alphabet_order);
  os << '\n';
}

ComplexSeq read_sequence(std::istream& is) { return sequence_from_json(parse(is)); }

void write_family(std::ostream& os, const ScsFamily& family) {
  os << "{\"L\":" << family.length() << ",\"K\":" << family.set_count() << ",\"M\":" << family.set_size()
     << ",\"omega\":" << json(std::vector<std::size_t>(family.constraint().forbidden().begin(),
                                                      family.constraint().forbidden().end()))
                             .dump()
     << ",\"alphabet_order\":" << (family.alphabet_order() ? json(*family.alphabet_order()) : json(nullptr)).dump()
     << ",\"params\":" << (family.info() ? info_to_json(*family.info()) : json(nullptr)).dump() << ",\"sets\":[";
  for (std::size_t s = 0; s < family.set_count(); ++s) {
    if (s) os << ',';
    os << "\n [";
    const auto& set = family.set(s);
    for (std::size_t m = 0; m < set.size(); ++m) {
      if (m) os << ',';
      os << "\n  ";
      write_sequence_object(os, set[m], family.alphabet_order());
    }
    os << ']';
  }
  os << "]}\n";
}

ScsFamily read_family(std::istream& is) {
  const json j = parse(is);
  const auto L = field<std::size_t>(j, "L");
  const auto K = field<std::size_t>(j, "K");
  const auto M = field<std::size_t>(j, "M");
  const auto omega = field<std::vector<std::size_t>>(j, "omega");
  if (!j.contains("sets") || !j.at("sets").is_array()) throw FormatError("missing \"sets\" array");
  std::vector<ScsFamily::Set> sets;
  for (const auto& js : j.at("sets")) {
    if (!js.is_array()) throw FormatError("each set must be an array of sequences");
    ScsFamily::Set set;
    for (const auto& jq : js) set.push_back(sequence_from_json(jq));
    sets.push_back(std::move(set));
  }
  if (sets.size() != K) throw FormatError("K does not match the number of sets");
  for (const auto& s : sets)
    if (s.size() > M) throw FormatError("a set has more than M sequences");
  std::optional<ConstructionInfo> info;
  if (j.contains("params") && !j.at("params").is_null()) info = info_from_json(j.at("params"));
  try {
    return ScsFamily(std::move(sets), SpectralConstraint(L, omega), optional_int(j, "alphabet_order"), info);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

void write_profile_csv(std::ostream& os, const CorrelationProfile& profile) {
  os << "tau,re,im,mag\n";
  for (std::size_t tau = 0; tau < profile.size(); ++tau) {
    const auto v = profile[tau];
    os << tau << ',' << format_real(v.real()) << ',' << format_real(v.imag()) << ',' << format_real(std::abs(v))
       << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, const spectral::SpectrumReport& report,
                        const SpectralConstraint& constraint) {
  os << "f,power,forbidden\n";
  for (std::size_t f = 0; f < report.power.size(); ++f)
    os << f << ',' << format_real(report.power[f]) << ',' << (constraint.is_forbidden(f) ? 1 : 0) << '\n';
}

std::string bounds_report_json(const bounds::BoundsReport& r) {
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  json in;
  in["L"] = r.input.L;
  in["n"] = r.input.n;
  in["M"] = r.input.M;
  in["K"] = r.input.K;
  in["window"] = opt(r.input.window);
  in["theta_a"] = opt(r.input.theta_a);
  in["theta_c"] = opt(r.input.theta_c);
  in["theta_max"] = opt(r.input.theta_max);
  in["interset"] = opt(r.input.interset);
  in["zcz_width"] = opt(r.input.zcz_width);

  json j;
  j["input"] = in;
  j["theta_opti"] = r.theta_opti;
  j["theta_a_lb"] = r.theta_a_lb;
  j["theta_c_lb"] = r.theta_c_lb;
  j["interset_lb"] = r.interset_lb;
  j["zcz_capacity"] = r.zcz_capacity;
  if (r.tsai) j["tsai"] = {{"lhs", r.tsai->lhs}, {"rhs", r.tsai->rhs}, {"satisfied", r.tsai->satisfied}};
  else j["tsai"] = nullptr;
  if (r.combined)
    j["combined"] = {{"lhs", r.combined->lhs}, {"rhs", r.combined->rhs}, {"slack", r.combined->slack},
                     {"satisfied", r.combined->satisfied}};
  else j["combined"] = nullptr;
  j["zcz_tradeoff"] = r.zcz ? json(bounds::to_string(*r.zcz)) : json(nullptr);
  j["eta"] = opt(r.eta);
  auto verdict = [](const auto& v) { return v ? json(bounds::to_string(*v)) : json(nullptr); };
  j["verdicts"] = {{"theta_max", verdict(r.theta_max_verdict)},
                   {"interset", verdict(r.interset_verdict)},
                   {"theta_a", verdict(r.theta_a_verdict)}};
  return j.dump(2);
}

std::string format_omega(const SpectralConstraint& constraint) {
  std::ostringstream os;
  bool first = true;
  for (auto f : constraint.forbidden()) {
    os << (first ? "" : ",") << f;
    first = false;
  }
  return os.str();
}

}  // namespace scs::io
