#include "dpham/formats.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dpham/errors.hpp"

namespace dpham {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "dp-hamilton-certificate";
constexpr int kFormatVersion = 1;

std::vector<Vertex> to_vertices(const DpGraph& g, const std::vector<Index>& ids,
                                VerificationReport& report) {
  std::vector<Vertex> out;
  out.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (auto v = g.from_serial(ids[i])) {
      out.push_back(*v);
    } else {
      report.failures.push_back({Check::OutOfRange, i, std::nullopt,
                                 "id " + std::to_string(ids[i]) +
                                     " outside [0, " +
                                     std::to_string(g.vertex_count()) + ")"});
    }
  }
  return out;
}

VerificationReport verify_ids(const DpGraph& g, const std::vector<Index>& ids) {
  VerificationReport report;
  auto vertices = to_vertices(g, ids, report);
  if (!report.ok()) return report;
  return verify_hamilton(g, vertices);
}

template <typename T>
T field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw CertificateSyntaxError(std::string("missing field \"") + key + "\"");
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw CertificateSyntaxError(std::string("field \"") + key +
                                 "\" has the wrong type");
  }
}

}  // namespace

const char* construction_name(Construction c) noexcept {
  switch (c) {
    case Construction::EvenLadder:
      return "even_ladder";
    case Construction::OddPqrs:
      return "odd_pqrs";
    case Construction::BruteForce:
      return "brute_force";
  }
  return "unknown";
}

std::optional<Construction> parse_construction(std::string_view name) noexcept {
  for (auto c : {Construction::EvenLadder, Construction::OddPqrs,
                 Construction::BruteForce}) {
    if (name == construction_name(c)) return c;
  }
  return std::nullopt;
}

std::string encode_edge_list(const DpGraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.t() << '\n';
  for (const auto& [lo, hi] : g.edges()) out << lo << ' ' << hi << '\n';
  return out.str();
}

std::string encode_dot(const DpGraph& g, const std::optional<HamiltonCycle>& cycle) {
  std::set<Edge> highlighted;
  if (cycle) {
    if (cycle->params() != g.params() || !verify_hamilton(g, *cycle).ok()) {
      throw std::invalid_argument("cycle is not a Hamilton cycle of this graph");
    }
    const auto& vs = cycle->vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Index a = g.serial(vs[i]);
      Index b = g.serial(vs[(i + 1) % vs.size()]);
      highlighted.emplace(std::min(a, b), std::max(a, b));
    }
  }

  std::ostringstream out;
  out << "graph \"DP(" << g.n() << "," << g.t() << ")\" {\n";
  for (Index id = 0; id < g.vertex_count(); ++id) {
    out << "  " << label(*g.from_serial(id)) << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << label(*g.from_serial(e.first)) << " -- "
        << label(*g.from_serial(e.second));
    if (highlighted.count(e)) out << " [color=red, penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

CycleCertificate make_certificate(const HamiltonCycle& cycle,
                                  Construction construction,
                                  const std::optional<ASequence>& a) {
  const DpGraph g(cycle.params());
  CycleCertificate cert;
  cert.n = g.n();
  cert.t = g.t();
  cert.construction = construction;
  if (a) cert.a_sequence = a->entries();
  cert.cycle.reserve(cycle.size());
  for (const Vertex& v : cycle.vertices()) cert.cycle.push_back(g.serial(v));
  return cert;
}

std::string encode_certificate(const CycleCertificate& cert) {
  const DpGraph g(make_params(cert.n, cert.t));
  if (!verify_ids(g, cert.cycle).ok()) {
    throw std::invalid_argument("refusing to encode a non-verifying cycle");
  }
  // nlohmann::json keeps object keys sorted, so the output is byte-stable.
  json doc;
  doc["format"] = kFormatTag;
  doc["version"] = kFormatVersion;
  doc["n"] = cert.n;
  doc["t"] = cert.t;
  doc["construction"] = construction_name(cert.construction);
  doc["a_sequence"] = cert.a_sequence ? json(*cert.a_sequence) : json(nullptr);
  doc["cycle"] = cert.cycle;
  return doc.dump() + "\n";
}

CycleCertificate decode_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateSyntaxError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CertificateSyntaxError("certificate must be a JSON object");
  if (field<std::string>(doc, "format") != kFormatTag) {
    throw CertificateSyntaxError("unrecognised format tag");
  }
  if (field<int>(doc, "version") != kFormatVersion) {
    throw CertificateSyntaxError("unsupported certificate version");
  }

  CycleCertificate cert;
  cert.n = field<Index>(doc, "n");
  cert.t = field<Index>(doc, "t");
  const auto construction = parse_construction(field<std::string>(doc, "construction"));
  if (!construction) throw CertificateSyntaxError("unknown construction kind");
  cert.construction = *construction;
  cert.cycle = field<std::vector<Index>>(doc, "cycle");
  if (auto it = doc.find("a_sequence"); it != doc.end() && !it->is_null()) {
    cert.a_sequence = field<std::vector<Index>>(doc, "a_sequence");
  }

  std::optional<GraphParams> params;
  try {
    params = make_params(cert.n, cert.t);
    if (cert.a_sequence) validate_a_sequence(*params, *cert.a_sequence);
  } catch (const std::invalid_argument& e) {
    throw CertificateSyntaxError(e.what());
  }
  const DpGraph g(*params);
  if (static_cast<Index>(cert.cycle.size()) != g.vertex_count()) {
    throw CertificateSyntaxError("cycle lists " + std::to_string(cert.cycle.size()) +
                                 " ids, expected " +
                                 std::to_string(g.vertex_count()));
  }
  auto report = verify_ids(g, cert.cycle);
  if (!report.ok()) throw CertificateVerificationError(std::move(report));
  return cert;
}

HamiltonCycle certificate_cycle(const CycleCertificate& cert) {
  const DpGraph g(make_params(cert.n, cert.t));
  VerificationReport report;
  auto vertices = to_vertices(g, cert.cycle, report);
  if (!report.ok()) throw CertificateVerificationError(std::move(report));
  return HamiltonCycle::canonical(g, std::move(vertices));
}

}  // namespace dpham
