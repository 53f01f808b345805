#include "qgrass/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace qgrass {

Json partition_json(const Partition& p) {
  Json j = Json::array();
  for (int v : p.parts()) j.push_back(v);
  return j;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition: expected an array of parts");
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

Json tuple_json(const IndexTuple& I) {
  Json j = Json::array();
  for (int k = 1; k <= I.length(); ++k) j.push_back(I.entry_string(k));
  return j;
}

int parse_doubled_entry(const Json& entry) {
  if (entry.is_number_integer()) return 2 * entry.get<int>();
  if (entry.is_array()) {
    if (entry.size() != 2) throw std::invalid_argument("tuple entry: expected [num, den]");
    int num = entry.at(0).get<int>();
    int den = entry.at(1).get<int>();
    if (den == 1) return 2 * num;
    if (den == 2) return num;
    throw std::invalid_argument("tuple entry: denominator must be 1 or 2");
  }
  if (entry.is_string()) {
    const std::string s = entry.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return 2 * std::stoi(s);
      int num = std::stoi(s.substr(0, slash));
      int den = std::stoi(s.substr(slash + 1));
      if (den == 1) return 2 * num;
      if (den == 2) return num;
    } catch (const std::logic_error&) {
      throw std::invalid_argument("tuple entry: cannot parse '" + s + "'");
    }
    throw std::invalid_argument("tuple entry: denominator must be 1 or 2 in '" + s + "'");
  }
  throw std::invalid_argument("tuple entry: expected string, integer or [num, den]");
}

IndexTuple tuple_from_json(const Json& j, const BoxShape& box) {
  if (!j.is_array()) throw std::invalid_argument("tuple: expected an array of entries");
  std::vector<int> doubled;
  for (const auto& e : j) doubled.push_back(parse_doubled_entry(e));
  return IndexTuple(box, std::move(doubled));
}

std::string bigint_string(const BigInt& v) { return v.str(); }

Json ring_element_json(const RingElement& el) {
  Json terms = Json::array();
  for (const auto& [key, coef] : el.terms()) {
    Json t;
    t["k"] = key.q;
    t["lambda"] = partition_json(key.lam);
    t["coeff"] = bigint_string(coef);
    terms.push_back(std::move(t));
  }
  Json j;
  j["d"] = el.box().d;
  j["n"] = el.box().n;
  j["terms"] = terms;
  return j;
}

RingElement ring_element_from_json(const Json& j, const BoxShape& box) {
  RingElement el(box);
  const Json& terms = j.is_object() && j.contains("terms") ? j.at("terms") : j;
  if (!terms.is_array()) throw std::invalid_argument("ring element: expected a term array");
  for (const auto& t : terms) {
    BigInt c(t.at("coeff").is_string() ? BigInt(t.at("coeff").get<std::string>())
                                       : BigInt(t.at("coeff").get<long long>()));
    el.add_term(t.at("k").get<int>(), partition_from_json(t.at("lambda")), c);
  }
  return el;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::ostringstream os;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ",";
    bool quote = cells[i].find_first_of(",\"") != std::string::npos;
    if (quote) {
      os << '"';
      for (char ch : cells[i]) {
        if (ch == '"') os << '"';
        os << ch;
      }
      os << '"';
    } else {
      os << cells[i];
    }
  }
  return os.str();
}

}  // namespace qgrass
