#include "rcp/report_store.hpp"

#include <fstream>

#include "rcp/errors.hpp"
#include "rcp/graph_io.hpp"
#include "rcp/json_io.hpp"

namespace rcp {

using nlohmann::json;

json polynomial_to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

IntPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& item : j) {
    try {
      if (item.is_string()) coeffs.emplace_back(item.get<std::string>());
      else if (item.is_number_integer()) coeffs.emplace_back(item.get<long long>());
      else throw ParseError("polynomial coefficient must be a decimal string or integer");
    } catch (const std::runtime_error& e) {
      throw ParseError(std::string("bad polynomial coefficient: ") + e.what());
    }
  }
  return IntPolynomial(std::move(coeffs));
}

json restraint_to_json(const Restraint& r) {
  json out = json::array();
  for (const auto& s : r.sets()) out.push_back(s);
  return out;
}

Restraint restraint_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("restraint JSON must be an array of arrays");
  std::vector<ColourSet> sets;
  for (const auto& s : j) {
    if (!s.is_array()) throw ParseError("restraint JSON must be an array of arrays");
    ColourSet set;
    for (const auto& c : s) {
      if (!c.is_number_unsigned() || c.get<std::uint64_t>() == 0 ||
          c.get<std::uint64_t>() > 0xFFFFFFFFu) {
        throw ParseError("restraint colours must be positive integers");
      }
      set.push_back(c.get<Colour>());
    }
    sets.push_back(std::move(set));
  }
  return Restraint(std::move(sets));
}

namespace {

json classes_to_json(const std::vector<RestraintClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back(restraint_to_json(c.canon));
  return out;
}

std::vector<RestraintClass> classes_from_json(const json& j, std::size_t k) {
  std::vector<RestraintClass> out;
  for (const auto& item : j) out.push_back({restraint_from_json(item), k});
  return out;
}

json witnesses_to_json(const std::vector<Witness>& ws) {
  json out = json::array();
  for (const auto& w : ws) {
    out.push_back({{"class", restraint_to_json(w.canon)},
                   {"degree", w.deficit.degree},
                   {"coefficient", w.deficit.coefficient.str()}});
  }
  return out;
}

std::vector<Witness> witnesses_from_json(const json& j) {
  std::vector<Witness> out;
  for (const auto& item : j) {
    out.push_back({restraint_from_json(item.at("class")),
                   {item.at("degree").get<int>(), BigInt(item.at("coefficient").get<std::string>())}});
  }
  return out;
}

}  // namespace

json report_to_json(const ExtremalReport& r) {
  return json{{"graph6", r.graph6},
              {"k", r.k},
              {"class_count", r.class_count},
              {"min_classes", classes_to_json(r.min_classes)},
              {"max_classes", classes_to_json(r.max_classes)},
              {"min_poly", polynomial_to_json(r.min_poly)},
              {"max_poly", polynomial_to_json(r.max_poly)},
              {"min_witnesses", witnesses_to_json(r.min_witnesses)},
              {"max_witnesses", witnesses_to_json(r.max_witnesses)}};
}

ExtremalReport report_from_json(const json& j) {
  try {
    ExtremalReport r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.k = j.at("k").get<std::size_t>();
    r.class_count = j.at("class_count").get<std::size_t>();
    r.min_classes = classes_from_json(j.at("min_classes"), r.k);
    r.max_classes = classes_from_json(j.at("max_classes"), r.k);
    r.min_poly = polynomial_from_json(j.at("min_poly"));
    r.max_poly = polynomial_from_json(j.at("max_poly"));
    r.min_witnesses = witnesses_from_json(j.at("min_witnesses"));
    r.max_witnesses = witnesses_from_json(j.at("max_witnesses"));
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report record: ") + e.what());
  }
}

ResultStore::ResultStore(std::filesystem::path dir) : file_(dir / "extremal.ndjson") {
  std::filesystem::create_directories(dir);
  std::ifstream in(file_);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(file_.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    ExtremalReport report = report_from_json(j);
    auto key = std::make_pair(report.graph6, report.k);
    records_.emplace(std::move(key), std::move(report));
  }
}

std::optional<ExtremalReport> ResultStore::find(const std::string& graph6, std::size_t k) const {
  std::lock_guard lock(mutex_);
  const auto it = records_.find({graph6, k});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void ResultStore::put(const ExtremalReport& report) {
  std::lock_guard lock(mutex_);
  const auto [it, inserted] = records_.emplace(std::make_pair(report.graph6, report.k), report);
  if (!inserted) return;
  std::ofstream out(file_, std::ios::app);
  out << report_to_json(report).dump() << '\n';
}

std::size_t ResultStore::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

ReportProvider stored_provider(ResultStore& store, ReportProvider fallback) {
  return [&store, fallback = std::move(fallback)](const Graph& g, std::size_t k) {
    if (auto hit = store.find(to_graph6(g), k)) return *hit;
    ExtremalReport report = fallback(g, k);
    store.put(report);
    return report;
  };
}

}  // namespace rcp
