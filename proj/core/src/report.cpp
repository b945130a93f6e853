#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dicirc/counting.hpp"
#include "dicirc/numth.hpp"

namespace dicirc {

namespace {

using Json = nlohmann::ordered_json;

Json degree_array(const std::vector<BigInt>& values) {
  Json array = Json::array();
  for (const BigInt& v : values) array.push_back(v.str());
  return array;
}

std::vector<BigInt> parse_degree_array(const Json& array) {
  std::vector<BigInt> values;
  for (const auto& v : array) values.emplace_back(v.get<std::string>());
  return values;
}

Provenance provenance_from_string(const std::string& name) {
  for (Provenance prov : {Provenance::closed_form, Provenance::generating_function,
                          Provenance::oracle, Provenance::reference_table})
    if (name == to_string(prov)) return prov;
  throw std::invalid_argument("unknown provenance: " + name);
}

GroupTag group_tag_from_string(const std::string& name) {
  for (GroupTag tag : {GroupTag::alpha_family, GroupTag::full_aut, GroupTag::circulant_units})
    if (name == to_string(tag)) return tag;
  throw std::invalid_argument("unknown group tag: " + name);
}

Json report_to_json_object(const CountReport& report) {
  Json object;
  object["p"] = std::to_string(report.p);
  object["group"] = to_string(report.group_tag);
  object["total"] = report.total.str();
  if (report.has_circulant_counts()) object["circulant"] = report.circulant.str();
  object["connected"] = report.connected.str();
  object["by_degree"] = degree_array(report.by_degree);
  if (report.has_circulant_counts())
    object["circulant_by_degree"] = degree_array(report.circulant_by_degree);
  object["connected_by_degree"] = degree_array(report.connected_by_degree);
  Json provenance;
  provenance["total"] = to_string(report.total_provenance);
  if (report.has_circulant_counts())
    provenance["circulant"] = to_string(report.circulant_provenance);
  provenance["connected"] = to_string(report.connected_provenance);
  provenance["by_degree"] = to_string(report.by_degree_provenance);
  if (report.has_circulant_counts())
    provenance["circulant_by_degree"] = to_string(report.circulant_by_degree_provenance);
  provenance["connected_by_degree"] = to_string(report.connected_by_degree_provenance);
  object["provenance"] = provenance;
  return object;
}

CountReport report_from_json_object(const Json& object) {
  CountReport report;
  report.p = static_cast<std::uint32_t>(std::stoul(object.at("p").get<std::string>()));
  report.group_tag = group_tag_from_string(object.at("group").get<std::string>());
  report.total = BigInt(object.at("total").get<std::string>());
  report.connected = BigInt(object.at("connected").get<std::string>());
  report.by_degree = parse_degree_array(object.at("by_degree"));
  report.connected_by_degree = parse_degree_array(object.at("connected_by_degree"));
  if (object.contains("circulant")) {
    report.circulant = BigInt(object.at("circulant").get<std::string>());
    report.circulant_by_degree = parse_degree_array(object.at("circulant_by_degree"));
  }
  const Json& provenance = object.at("provenance");
  report.total_provenance = provenance_from_string(provenance.at("total"));
  report.connected_provenance = provenance_from_string(provenance.at("connected"));
  report.by_degree_provenance = provenance_from_string(provenance.at("by_degree"));
  report.connected_by_degree_provenance =
      provenance_from_string(provenance.at("connected_by_degree"));
  if (provenance.contains("circulant")) {
    report.circulant_provenance = provenance_from_string(provenance.at("circulant"));
    report.circulant_by_degree_provenance =
        provenance_from_string(provenance.at("circulant_by_degree"));
  }
  return report;
}

}  // namespace

std::string reports_to_json(const std::vector<CountReport>& reports) {
  Json document;
  document["format_version"] = "1";
  Json array = Json::array();
  for (const CountReport& report : reports) array.push_back(report_to_json_object(report));
  document["reports"] = array;
  return document.dump(2) + "\n";
}

std::vector<CountReport> reports_from_json(const std::string& text) {
  const Json document = Json::parse(text);
  if (document.at("format_version").get<std::string>() != "1")
    throw std::invalid_argument("unsupported report format version");
  std::vector<CountReport> reports;
  for (const auto& object : document.at("reports"))
    reports.push_back(report_from_json_object(object));
  return reports;
}

std::string report_to_text(const CountReport& report) {
  std::ostringstream out;
  out << "p=" << report.p << " group=" << to_string(report.group_tag) << "\n";
  out << "total " << report.total << "\n";
  if (report.has_circulant_counts()) out << "circulant " << report.circulant << "\n";
  out << "connected " << report.connected << "\n";
  return out.str();
}

std::string render_connected_table(std::uint32_t p_max, TableFormat format) {
  if (p_max < 2) throw std::invalid_argument("render_connected_table: p_max must be >= 2");
  std::ostringstream out;
  for (std::uint32_t p = 2; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    std::vector<BigInt> connected_by_degree;
    BigInt connected;
    if (p == 2) {
      const CountReport report = quaternion_counts().alpha;
      connected_by_degree = report.connected_by_degree;
      connected = report.connected;
    } else {
      for (std::uint32_t k = 0; k <= 4 * p - 1; ++k)
        connected_by_degree.push_back(count_connected_by_outdegree(p, k));
      connected = count_connected(p);
    }
    if (format == TableFormat::text) {
      out << "p=" << p << "\t(";
      for (std::uint32_t k = 2; k <= 4 * p - 1; ++k)
        out << (k > 2 ? "," : "") << connected_by_degree[k];
      out << ")\t" << connected << "\n";
    } else {
      out << p;
      for (std::uint32_t k = 2; k <= 4 * p - 1; ++k) out << "," << connected_by_degree[k];
      out << "," << connected << "\n";
    }
  }
  return out.str();
}

}  // namespace dicirc
