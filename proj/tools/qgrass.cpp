#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qgrass/exec.hpp"
#include "qgrass/serialize.hpp"

using namespace qgrass;

namespace {

struct PrecisionChoice {
  bool extended = false;
  unsigned bits = 128;
};

PrecisionChoice parse_precision(const std::string& s) {
  if (s.empty() || s == "double") return {};
  if (s.rfind("extended", 0) == 0) {
    PrecisionChoice p{true, 128};
    auto colon = s.find(':');
    if (colon != std::string::npos) {
      int bits = std::stoi(s.substr(colon + 1));
      if (bits < 24 || bits > 65536) throw std::invalid_argument("precision bits out of range");
      p.bits = static_cast<unsigned>(bits);
    }
    return p;
  }
  throw std::invalid_argument("precision must be 'double' or 'extended:<bits>'");
}

struct Args {
  std::string cmd;
  int d = 2;
  int n = 4;
  std::string out;
  std::string format = "json";
  double tol = -1.0;  // per-command default filled in later
  std::string check = "all";
  std::string t_str = "1";
  int samples = 4;
  unsigned seed = 20240801u;
  std::string index;
  bool matrix = false;
  std::string infile;
  int nmax = 0;
  int k = 1;
  std::string lambda = "[]";
  bool serial = false;
};

void emit(const Args& args, const std::string& text) {
  if (args.out.empty() || args.out == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(args.out);
  if (!f) throw std::invalid_argument("cannot open output file: " + args.out);
  f << text << "\n";
}

template <class R>
Cplx<R> parse_t(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return Cplx<R>::from(std::stod(s));
  return Cplx<R>::from(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

IndexTuple parse_index(const std::string& s, const BoxShape& box) {
  if (s.empty()) return tuple_I0(box);
  std::vector<int> doubled;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) doubled.push_back(parse_doubled_entry(Json(tok)));
  return IndexTuple(box, std::move(doubled));
}

Partition parse_partition(const std::string& s) { return partition_from_json(Json::parse(s)); }

template <class R>
ToeplitzPoint<R> load_point(const Args& args) {
  if (!args.infile.empty()) {
    Json j;
    if (args.infile == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream f(args.infile);
      if (!f) throw std::invalid_argument("cannot open point file: " + args.infile);
      j = Json::parse(f);
    }
    return point_from_json<R>(j);
  }
  BoxShape box(args.d, args.n);
  return fiber_point(parse_t<R>(args.t_str), parse_index(args.index, box));
}

template <class R>
int cmd_gw_table(const Args& args) {
  const BoxShape box(args.d, args.n);
  const double tol = args.tol < 0 ? 1e-6 : args.tol;
  const Exec exec = args.serial ? Exec::serial : Exec::parallel;
  auto rows = gw_table<R>(box, exec);

  double max_residual = 0.0;
  bool mismatch = false;
  for (const auto& row : rows) {
    max_residual = std::max(max_residual, to_double(row.residual));
    if (row.exact != row.rounded) mismatch = true;
  }

  if (args.format == "csv") {
    std::ostringstream os;
    os << "d,n,lambda,mu,nu,k,value,residual";
    for (const auto& row : rows) os << "\n" << gw_row_csv(row, box);
    emit(args, os.str());
  } else {
    Json j;
    j["box"] = Json::array({box.d, box.n});
    j["max_residual"] = max_residual;
    Json jrows = Json::array();
    for (const auto& row : rows) jrows.push_back(gw_row_json(row, box));
    j["rows"] = jrows;
    emit(args, j.dump(2));
  }

  if (mismatch || max_residual >= tol) {
    Json err;
    err["error"] = mismatch ? "engine-mismatch" : "residual";
    err["detail"] = mismatch ? "combinatorial and residue-sum engines disagree"
                             : "rounding residual above tolerance; retry with --precision extended:256";
    err["max_residual"] = max_residual;
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}

template <class R>
int cmd_verify(const Args& args) {
  const BoxShape box(args.d, args.n);
  const double tol = args.tol < 0 ? 1e-9 : args.tol;
  const Exec exec = args.serial ? Exec::serial : Exec::parallel;
  const Cplx<R> t = parse_t<R>(args.t_str);

  std::vector<CheckReport<R>> reports;
  auto run_duality = [&]() {
    CheckReport<R> rep{"duality", box, R(0), ""};
    for (const auto& lam : enumerate_box(box)) {
      for (const auto& I : enumerate_index_tuples(box)) {
        R r = schur_duality_residual<R>(lam, I);
        if (r > rep.max_residual) {
          rep.max_residual = r;
          rep.witness = "lambda=" + lam.to_string() + " I=" + I.to_string();
        }
      }
    }
    return rep;
  };

  if (args.check == "all") {
    for (OrthoCheck c : all_checks())
      reports.push_back(check_orthogonality<R>(box, c, t, exec, args.seed, args.samples));
    reports.push_back(run_duality());
  } else if (args.check == "duality") {
    reports.push_back(run_duality());
  } else {
    reports.push_back(
        check_orthogonality<R>(box, parse_check(args.check), t, exec, args.seed, args.samples));
  }

  Json j = Json::array();
  double worst = 0.0;
  for (const auto& rep : reports) {
    j.push_back(check_report_json(rep));
    worst = std::max(worst, to_double(rep.max_residual));
  }
  emit(args, (j.size() == 1 ? j.at(0) : j).dump(2));
  if (worst >= tol) {
    Json err;
    err["error"] = "residual";
    err["detail"] = "verification residual above tolerance";
    err["max_residual"] = worst;
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}

template <class R>
int cmd_point(const Args& args) {
  auto u = load_point<R>(args);
  if (args.matrix) {
    std::ostringstream os;
    auto m = u.dense();
    for (size_t r = 0; r < m.size(); ++r) {
      if (r) os << "\n";
      std::vector<std::string> cells;
      for (const auto& v : m[r]) {
        std::ostringstream c;
        c << to_double(v.re);
        if (v.im != R(0)) c << (to_double(v.im) < 0 ? "" : "+") << to_double(v.im) << "i";
        cells.push_back(c.str());
      }
      os << csv_line(cells);
    }
    emit(args, os.str());
    return 0;
  }
  emit(args, point_json(u).dump(2));
  return 0;
}

template <class R>
int cmd_factorize(const Args& args) {
  const double tol = args.tol < 0 ? 1e-9 : args.tol;
  auto u = load_point<R>(args);
  auto grid = factor_params(u, R(tol));
  emit(args, grid_json(grid).dump(2));
  return 0;
}

template <class R>
int cmd_inequality(const Args& args) {
  const Exec exec = args.serial ? Exec::serial : Exec::parallel;
  std::vector<BoxShape> boxes;
  if (args.nmax > 0) {
    for (int n = 2; n <= args.nmax; ++n)
      for (int d = 1; d < n; ++d) boxes.emplace_back(d, n);
  } else {
    boxes.emplace_back(args.d, args.n);
  }
  Json j = Json::array();
  int violations = 0;
  for (const auto& box : boxes) {
    auto rep = inequality_scan<R>(box, exec);
    violations += rep.violations;
    j.push_back(inequality_report_json(rep));
  }
  emit(args, (j.size() == 1 ? j.at(0) : j).dump(2));
  if (violations > 0) {
    Json err;
    err["error"] = "violation";
    err["detail"] = "inequality scan found violations";
    err["count"] = violations;
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}

template <class R>
int cmd_pieri(const Args& args) {
  const BoxShape box(args.d, args.n);
  Partition lam = parse_partition(args.lambda);
  RingElement result = pieri_multiply(RingElement::schubert(box, lam), args.k);
  emit(args, ring_element_json(result).dump(2));
  return 0;
}

template <class R>
int dispatch(const Args& args) {
  if (args.cmd == "gw-table") return cmd_gw_table<R>(args);
  if (args.cmd == "verify") return cmd_verify<R>(args);
  if (args.cmd == "point") return cmd_point<R>(args);
  if (args.cmd == "factorize") return cmd_factorize<R>(args);
  if (args.cmd == "inequality") return cmd_inequality<R>(args);
  if (args.cmd == "pieri") return cmd_pieri<R>(args);
  throw std::invalid_argument("no subcommand given (see --help)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Schubert calculus toolkit for Grassmannians"};
  app.require_subcommand(0, 1);

  Args args;
  std::string precision_str;
  app.add_option("--precision", precision_str,
                 "numeric carrier: double (default) or extended:<bits>; falls back to "
                 "QGRASS_PRECISION");

  auto add_common = [&](CLI::App* sub, bool with_box = true) {
    sub->fallthrough();  // lets the global --precision appear after the subcommand
    if (with_box) {
      sub->add_option("--d", args.d, "number of rows (subspace dimension)")->required();
      sub->add_option("--n", args.n, "ambient dimension")->required();
    }
    sub->add_option("--out", args.out, "output file (default stdout)");
    sub->add_option("--tol", args.tol, "override the default tolerance");
    sub->add_flag("--serial", args.serial, "force the serial reference kernels");
  };

  auto* gw = app.add_subcommand("gw-table", "tabulate invariants with both engines");
  add_common(gw);
  gw->add_option("--format", args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "residual sweeps of the pairing identities");
  add_common(verify);
  verify->add_option("--check", args.check,
                     "littlewood, pairing1, pairing2, pairing3, row-char, row-pd, duality or all");
  verify->add_option("--t", args.t_str, "scale parameter, real or re,im");
  verify->add_option("--samples", args.samples, "random tuples per sweep");
  verify->add_option("--seed", args.seed, "random seed");

  auto* point = app.add_subcommand("point", "build a fiber point or load one from JSON");
  add_common(point);
  point->add_option("--t", args.t_str, "spectral scale, real or re,im");
  point->add_option("--index", args.index, "label entries, e.g. \"-1/2,3/2\" (default symmetric)");
  point->add_option("--in", args.infile, "point JSON file ('-' for stdin) instead of --t/--index");
  point->add_flag("--matrix", args.matrix, "emit the dense matrix as CSV instead of JSON");

  auto* factorize = app.add_subcommand("factorize", "stratum factorization parameters");
  add_common(factorize);
  factorize->add_option("--t", args.t_str, "spectral scale, real or re,im");
  factorize->add_option("--index", args.index, "label entries (default symmetric)");
  factorize->add_option("--in", args.infile, "point JSON file ('-' for stdin)");

  auto* ineq = app.add_subcommand("inequality", "fiber magnitude bound scan");
  add_common(ineq);
  ineq->get_option("--d")->required(false);
  ineq->get_option("--n")->required(false);
  ineq->add_option("--n-max", args.nmax, "scan every box with n up to this bound");

  auto* pieri = app.add_subcommand("pieri", "multiply a Schubert element by a generator");
  add_common(pieri);
  pieri->add_option("--k", args.k, "generator degree")->required();
  pieri->add_option("--lambda", args.lambda, "partition as JSON, e.g. [2,1]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    Json err;
    err["error"] = "usage";
    err["detail"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  }

  for (CLI::App* sub : app.get_subcommands()) args.cmd = sub->get_name();

  try {
    if (precision_str.empty()) {
      const char* env = std::getenv("QGRASS_PRECISION");
      if (env) precision_str = env;
    }
    PrecisionChoice prec = parse_precision(precision_str);
    if (prec.extended) {
      extended_precision::set_bits(prec.bits);
      return dispatch<ExtendedReal>(args);
    }
    return dispatch<double>(args);
  } catch (const precision_error& e) {
    Json err;
    err["error"] = "precision";
    err["detail"] = std::string(e.what()) + "; retry with --precision extended:256";
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    Json err;
    err["error"] = "domain";
    err["detail"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    Json err;
    err["error"] = "invalid-input";
    err["detail"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    Json err;
    err["error"] = "invalid-input";
    err["detail"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "internal";
    err["detail"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
