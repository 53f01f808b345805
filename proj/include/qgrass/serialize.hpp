#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qgrass/gwcalc.hpp"
#include "qgrass/partitions.hpp"
#include "qgrass/qring.hpp"
#include "qgrass/rootdata.hpp"
#include "qgrass/toeplitz.hpp"
#include "qgrass/totalpos.hpp"
#include "qgrass/verify.hpp"

namespace qgrass {

using Json = nlohmann::json;

Json partition_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// Tuples serialize as exact entry strings ("-1/2", "2"); accepted input
/// entries are such strings, plain integers, or [num, den] pairs.
Json tuple_json(const IndexTuple& I);
IndexTuple tuple_from_json(const Json& j, const BoxShape& box);
int parse_doubled_entry(const Json& entry);

Json ring_element_json(const RingElement& el);
RingElement ring_element_from_json(const Json& j, const BoxShape& box);

std::string bigint_string(const BigInt& v);

template <class R>
Json point_json(const ToeplitzPoint<R>& u) {
  Json j;
  j["d"] = u.box().d;
  j["n"] = u.box().n;
  Json bands = Json::array();
  for (int k = 1; k < u.box().n; ++k) {
    Cplx<R> b = u.band(k);
    bands.push_back(Json::array({to_double(b.re), to_double(b.im)}));
  }
  j["x"] = bands;
  if (u.provenance()) {
    j["t"] = Json::array({to_double(u.provenance()->t.re), to_double(u.provenance()->t.im)});
    j["I"] = tuple_json(u.provenance()->I);
  }
  return j;
}

template <class R>
ToeplitzPoint<R> point_from_json(const Json& j) {
  BoxShape box(j.at("d").get<int>(), j.at("n").get<int>());
  const Json& bands = j.at("x");
  if (!bands.is_array() || static_cast<int>(bands.size()) != box.n - 1)
    throw std::invalid_argument("point: need n-1 band entries");
  std::vector<Cplx<R>> x;
  for (const auto& b : bands) {
    if (b.is_array())
      x.push_back(Cplx<R>::from(b.at(0).get<double>(), b.size() > 1 ? b.at(1).get<double>() : 0.0));
    else
      x.push_back(Cplx<R>::from(b.get<double>()));
  }
  std::optional<PointProvenance<R>> prov;
  if (j.contains("t") && j.contains("I")) {
    const Json& tj = j.at("t");
    Cplx<R> t = tj.is_array() ? Cplx<R>::from(tj.at(0).get<double>(), tj.size() > 1 ? tj.at(1).get<double>() : 0.0)
                              : Cplx<R>::from(tj.get<double>());
    prov = PointProvenance<R>{t, tuple_from_json(j.at("I"), box)};
  }
  return ToeplitzPoint<R>(box, std::move(x), std::move(prov));
}

template <class R>
Json grid_json(const FactorGrid<R>& g) {
  Json j;
  j["d"] = g.box().d;
  j["n"] = g.box().n;
  Json entries = Json::array();
  for (int i = 1; i <= g.box().d; ++i)
    for (int jj = 1; jj <= g.box().c(); ++jj)
      entries.push_back(Json::array({i, jj, to_double(g.at(i, jj))}));
  j["a"] = entries;
  return j;
}

template <class R>
FactorGrid<R> grid_from_json(const Json& j) {
  BoxShape box(j.at("d").get<int>(), j.at("n").get<int>());
  FactorGrid<R> g = FactorGrid<R>::zeros(box);
  for (const auto& e : j.at("a")) g.at(e.at(0).get<int>(), e.at(1).get<int>()) = R(e.at(2).get<double>());
  return g;
}

template <class R>
Json gw_row_json(const GwRow<R>& row, const BoxShape& box) {
  Json j;
  j["d"] = box.d;
  j["n"] = box.n;
  j["lambda"] = partition_json(row.lam);
  j["mu"] = partition_json(row.mu);
  j["nu"] = partition_json(row.nu);
  j["k"] = row.k;
  j["value"] = bigint_string(row.exact);
  j["residual"] = to_double(row.residual);
  return j;
}

template <class R>
Json check_report_json(const CheckReport<R>& rep) {
  Json j;
  j["check"] = rep.check;
  j["box"] = Json::array({rep.box.d, rep.box.n});
  j["max_residual"] = to_double(rep.max_residual);
  j["witness"] = rep.witness;
  return j;
}

template <class R>
Json inequality_report_json(const InequalityReport<R>& rep) {
  Json j;
  j["box"] = Json::array({rep.box.d, rep.box.n});
  j["violations"] = rep.violations;
  j["worst_excess"] = to_double(rep.worst_excess);
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["lambda"] = partition_json(row.lam);
    r["max_abs"] = to_double(row.max_abs);
    r["argmax"] = tuple_json(row.argmax);
    r["bound"] = to_double(row.bound);
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  return j;
}

/// CSV with quoted string cells; callers pass rows of preformatted cells.
std::string csv_line(const std::vector<std::string>& cells);

template <class R>
std::string gw_row_csv(const GwRow<R>& row, const BoxShape& box) {
  return csv_line({std::to_string(box.d), std::to_string(box.n), row.lam.to_string(),
                   row.mu.to_string(), row.nu.to_string(), std::to_string(row.k),
                   bigint_string(row.exact), std::to_string(to_double(row.residual))});
}

}  // namespace qgrass
