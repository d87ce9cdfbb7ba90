// symshift: command-line front end for symmetric shifted monomial ideals.
//
// Subcommands: check, op, invariants, decompose, polymatroid, toric,
// oracle-verify.  Output is byte-stable for fixed inputs and flags; --json
// switches every report to a JSON object carrying schema_version.
//
// Exit codes: 0 success, 1 usage/input error, 2 verification failure
// (oracle disagreement or theorem-violation report), 3 budget exceeded
// (partial report where available).

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symshift/decomp.hpp"
#include "symshift/invariants.hpp"
#include "symshift/json_io.hpp"
#include "symshift/polymatroid.hpp"
#include "symshift/toric.hpp"

namespace {

using namespace symshift;

std::string bool_str(bool b) { return b ? "true" : "false"; }

Partition parse_lambda(const std::string& s) {
  Partition lam;
  std::stringstream ss(s);
  std::string tok;
  size_t idx = 0;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      lam.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("--lambda[" + std::to_string(idx) + "]: '" + tok + "' is not an integer");
    }
    if (lam.back() < 0) throw std::invalid_argument("--lambda[" + std::to_string(idx) + "]: must be nonnegative");
    ++idx;
  }
  if (lam.empty()) throw std::invalid_argument("--lambda: empty partition");
  if (auto bad = partition_violation(lam))
    throw std::invalid_argument("--lambda[" + std::to_string(*bad) + "]: breaks the nondecreasing order");
  return lam;
}

// Exactly one of --ideal (JSON file, arbitrary generator list) and --lambda
// (inline partition, the closure ideal it generates) selects the input.
SymmetricIdeal input_ideal(const std::string& path, const std::string& lambda) {
  if (path.empty() == lambda.empty())
    throw std::invalid_argument("give exactly one of --ideal and --lambda");
  if (!path.empty()) return load_symideal(path);
  Partition lam = parse_lambda(lambda);
  return sss_closure(static_cast<int>(lam.size()), {lam});
}

Json big_json(const BigInt& v) {
  static const BigInt lo = BigInt(std::numeric_limits<long long>::min());
  static const BigInt hi = BigInt(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return Json(static_cast<long long>(v));
  return Json(v.str());
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---- check ----

struct CheckArgs {
  std::string ideal, lambda;
  bool json = false;
};

int run_check(const CheckArgs& a) {
  SymmetricIdeal I = input_ideal(a.ideal, a.lambda);
  const bool sh = is_shifted(I), ssh = is_strongly_shifted(I);
  auto v1 = shifted_violation(I);
  auto v2 = strongly_shifted_violation(I);
  const bool degenerate = I.is_zero() || I.is_unit();
  if (a.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = I.n;
    j["generators"] = Json::array();
    for (const auto& lam : I.lambdas) j["generators"].push_back(lam);
    j["shifted"] = sh;
    j["strongly_shifted"] = ssh;
    j["equigenerated"] = is_equigenerated(I);
    j["principal_borel"] = is_principal_borel(I);
    j["height"] = degenerate ? Json(nullptr) : Json(height(I));
    auto viol = [](const std::optional<BorelViolation>& v) -> Json {
      if (!v) return nullptr;
      return Json{{"lambda", v->lambda}, {"i", v->i}, {"j", v->j}, {"moved", v->moved}};
    };
    j["shifted_violation"] = viol(v1);
    j["strongly_shifted_violation"] = viol(v2);
    emit(j);
    return 0;
  }
  std::cout << "shifted: " << bool_str(sh) << ", strongly_shifted: " << bool_str(ssh) << "\n";
  std::cout << "n: " << I.n << "\n";
  std::cout << "generators: " << I.lambdas.size() << "\n";
  for (const auto& lam : I.lambdas) std::cout << "  " << to_string(lam) << "\n";
  std::cout << "equigenerated: " << bool_str(is_equigenerated(I)) << "\n";
  std::cout << "principal_borel: " << bool_str(is_principal_borel(I)) << "\n";
  if (!degenerate) std::cout << "height: " << height(I) << "\n";
  auto report = [](const char* name, const std::optional<BorelViolation>& v) {
    if (v)
      std::cout << name << ": lambda=" << to_string(v->lambda) << " i=" << v->i << " j=" << v->j
                << " moved=" << to_string(v->moved) << "\n";
  };
  report("shifted_violation", v1);
  report("strongly_shifted_violation", v2);
  return 0;
}

// ---- op ----

struct OpArgs {
  std::string op;
  std::string ideal, lambda;
  std::string other, mu;
  int k = 2;
  int c = 1;
  int m = 2;
  std::string mode = "min";
  bool oracle = false, verify = false, json = false;
  std::string out;
};

SymmetricIdeal second_operand(const OpArgs& a) {
  if (a.other.empty() == a.mu.empty())
    throw std::invalid_argument("binary op: give exactly one of --other and --mu");
  if (!a.other.empty()) return load_symideal(a.other);
  Partition lam = parse_lambda(a.mu);
  return sss_closure(static_cast<int>(lam.size()), {lam});
}

SymmetricIdeal op_compressed(const OpArgs& a, const SymmetricIdeal& I) {
  if (a.op == "add") return add(I, second_operand(a));
  if (a.op == "intersect") return intersect(I, second_operand(a));
  if (a.op == "multiply") return multiply(I, second_operand(a));
  if (a.op == "power") return power(I, a.k);
  if (a.op == "saturate") return saturate_veronese(I, a.c);
  if (a.op == "radical") return I.is_zero() ? I : radical(I);
  if (a.op == "symbolic-power") {
    if (a.mode != "min")
      throw std::invalid_argument("symbolic-power: closed form exists only for --mode min; use --oracle");
    if (!is_principal_borel(I))
      throw std::invalid_argument("symbolic-power: closed form needs a principal Borel ideal; use --oracle");
    if (a.m < 1) throw std::invalid_argument("symbolic-power: need --m >= 1");
    const Partition lam = borel_generators(I)[0];
    const int jp = min_index(lam);
    return vs_ideal(I.n, jp, Int(a.m) * lam[jp - 1]);
  }
  throw std::invalid_argument("unknown op '" + a.op + "'");
}

MonomialIdeal op_oracle(const OpArgs& a, const SymmetricIdeal& I) {
  MonomialIdeal E = expand(I);
  if (a.op == "add") return sum(E, expand(second_operand(a)));
  if (a.op == "intersect") return intersect(E, expand(second_operand(a)));
  if (a.op == "multiply") return product(E, expand(second_operand(a)));
  if (a.op == "power") return power(E, a.k);
  if (a.op == "saturate") return saturation(E, expand(squarefree_veronese(I.n, a.c)));
  if (a.op == "radical") return radical(E);
  if (a.op == "symbolic-power") {
    if (a.m < 1) throw std::invalid_argument("symbolic-power: need --m >= 1");
    return symbolic_power(E, a.m, a.mode == "min" ? SymbolicMode::Min : SymbolicMode::Ass);
  }
  throw std::invalid_argument("unknown op '" + a.op + "'");
}

int run_op(const OpArgs& a) {
  SymmetricIdeal I = input_ideal(a.ideal, a.lambda);
  if (a.oracle && a.verify) throw std::invalid_argument("--oracle and --verify are mutually exclusive");
  SymmetricIdeal result{I.n, {}};
  std::string route;
  std::optional<bool> verified;
  if (a.verify) {
    result = op_compressed(a, I);
    MonomialIdeal via_oracle = op_oracle(a, I);
    verified = (expand(result) == via_oracle);
    route = "compressed";
  } else if (a.oracle) {
    result = compress_symmetric(op_oracle(a, I));
    route = "oracle";
  } else {
    result = op_compressed(a, I);
    route = "compressed";
  }
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw std::invalid_argument(a.out + ": cannot open for writing");
    f << to_json(result).dump(2) << "\n";
  }
  if (a.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["op"] = a.op;
    j["route"] = route;
    j["result"] = to_json(result);
    if (verified) j["verify"] = *verified ? "PASS" : "FAIL";
    emit(j);
  } else {
    std::cout << "op: " << a.op << "\n";
    std::cout << "route: " << route << "\n";
    std::cout << "generators: " << result.lambdas.size() << "\n";
    for (const auto& lam : result.lambdas) std::cout << "  " << to_string(lam) << "\n";
    if (verified) std::cout << "verify: " << (*verified ? "PASS" : "FAIL") << "\n";
  }
  return verified && !*verified ? 2 : 0;
}

// ---- invariants ----

struct InvArgs {
  std::string ideal, lambda;
  int kmax = 4;
  bool json = false;
};

int run_invariants(const InvArgs& a) {
  SymmetricIdeal I = input_ideal(a.ideal, a.lambda);
  if (I.is_zero() || I.is_unit()) throw std::invalid_argument("invariants: ideal must be nonzero and proper");
  if (a.kmax < 1) throw std::invalid_argument("invariants: need --kmax >= 1");
  const BettiTable B = betti(I);
  const SpreadReport sp = analytic_spread(I);
  const StabReport st = stab_report(I, a.kmax);
  if (a.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = I.n;
    j["generators"] = Json::array();
    for (const auto& lam : I.lambdas) j["generators"].push_back(lam);
    j["height"] = height(I);
    j["pd"] = proj_dim_quotient(I);
    j["depth"] = depth_quotient(I);
    Json bt;
    bt["pd_ideal"] = B.pd_ideal;
    bt["totals"] = Json::array();
    for (const auto& t : B.totals) bt["totals"].push_back(big_json(t));
    bt["graded"] = Json::array();
    for (const auto& [key, val] : B.graded)
      bt["graded"].push_back(Json{{"i", key.first}, {"shift", key.second}, {"value", big_json(val)}});
    j["betti"] = bt;
    j["spread"] = Json{{"value", sp.value},
                       {"rank", sp.rank},
                       {"graph_value", sp.graph_value ? Json(*sp.graph_value) : Json(nullptr)},
                       {"r", sp.r},
                       {"s", sp.s}};
    j["depth_table"] = st.depth.depths;
    j["ass_table"] = st.heights;
    j["stab"] = Json{{"astab", st.astab},
                     {"astab_exact", st.astab_exact},
                     {"astab_bound", st.astab_bound},
                     {"stable_heights", st.stable_heights},
                     {"dstab", st.depth.dstab_observed},
                     {"dstab_exact", st.depth.dstab_exact}};
    emit(j);
    return 0;
  }
  std::cout << "n: " << I.n << "\n";
  std::cout << "generators: " << I.lambdas.size() << "\n";
  std::cout << "height: " << height(I) << "\n";
  std::cout << "pd: " << proj_dim_quotient(I) << "\n";
  std::cout << "depth: " << depth_quotient(I) << "\n";
  std::cout << "betti_totals:";
  for (const auto& t : B.totals) std::cout << " " << t;
  std::cout << "\n";
  for (const auto& [key, val] : B.graded)
    std::cout << "  beta(i=" << key.first << ", deg=" << key.second << ") = " << val << "\n";
  std::cout << "spread: " << sp.value << " (rank " << sp.rank;
  if (sp.graph_value) std::cout << ", graph " << *sp.graph_value;
  std::cout << ")\n";
  std::cout << "depth_table:";
  for (size_t k = 0; k < st.depth.depths.size(); ++k)
    std::cout << (k ? ", " : " ") << "k=" << k + 1 << ": " << st.depth.depths[k];
  std::cout << "\n";
  std::cout << "ass_heights:";
  for (size_t k = 0; k < st.heights.size(); ++k) {
    std::cout << (k ? "; " : " ") << "k=" << k + 1 << ": {";
    for (size_t i = 0; i < st.heights[k].size(); ++i) std::cout << (i ? "," : "") << st.heights[k][i];
    std::cout << "}";
  }
  std::cout << "\n";
  std::cout << "astab: " << st.astab << (st.astab_exact ? " (exact)" : " (observed)")
            << ", dstab: " << st.depth.dstab_observed << (st.depth.dstab_exact ? " (exact)" : " (observed)")
            << "\n";
  return 0;
}

// ---- decompose ----

struct DecompArgs {
  std::string lambda;
  int k = 1;
  bool verify = false, json = false;
};

int run_decompose(const DecompArgs& a) {
  Partition lam = parse_lambda(a.lambda);
  PrincipalDecomposition D = principal_decomposition(lam, a.k);
  bool oracle_ok = false;
  if (a.verify) {
    verify_power_decomposition(D);  // throws VerificationFailure on mismatch
    oracle_ok = true;
  }
  if (a.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = D.n;
    j["lambda"] = D.lambda;
    j["k"] = D.k;
    j["components"] = Json::array();
    for (const auto& c : D.components) {
      Json cj{{"j", c.j}, {"m", c.m}, {"kept", c.kept}, {"rule", c.rule}};
      cj["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
      j["components"].push_back(cj);
    }
    if (a.verify) j["oracle"] = "OK";
    emit(j);
    return 0;
  }
  std::ostringstream line;
  line << "components {";
  bool first = true;
  for (const auto& c : D.components)
    if (c.kept) {
      line << (first ? "" : ", ") << c.j << ":" << c.m;
      first = false;
    }
  line << "}";
  for (const auto& c : D.components)
    if (!c.kept && c.j >= min_index(lam)) line << ", j=" << c.j << " redundant";
  if (a.verify) line << ", oracle OK";
  std::cout << line.str() << "\n";
  for (const auto& c : D.components) {
    std::cout << "  j=" << c.j << " m=" << c.m << " " << (c.kept ? "kept" : "dropped") << " rule=" << c.rule;
    if (c.witness) std::cout << " witness=" << to_string(*c.witness);
    std::cout << "\n";
  }
  (void)oracle_ok;
  return 0;
}

// ---- polymatroid ----

struct PolyArgs {
  std::string lambda;
  bool json = false;
};

int run_polymatroid(const PolyArgs& a) {
  Partition lam = parse_lambda(a.lambda);
  const int n = static_cast<int>(lam.size());
  SymmetricIdeal I = sss_closure(n, {lam});
  const ExchangeReport ex = is_polymatroidal(I);
  const StrongExchangeReport sep = strong_exchange(lam);
  const TransversalReport tr = transversal_classify(lam);
  const auto fact = veronese_factorization(lam);
  auto fact_str = [&] {
    std::ostringstream os;
    for (size_t i = 0; i < fact.size(); ++i) {
      if (i) os << " * ";
      os << "I_{" << n << "," << fact[i].first << "}";
      if (fact[i].second != 1) os << "^" << fact[i].second;
    }
    return fact.empty() ? std::string("(unit)") : os.str();
  };
  if (a.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = n;
    j["lambda"] = lam;
    j["polymatroidal"] = ex.polymatroidal;
    j["sep"] = Json{{"shape", sep.shape}, {"holds", sep.holds}};
    j["transversal"] = tr.transversal;
    j["lattice_path"] = tr.lattice_path;
    j["factorization"] = Json::array();
    for (const auto& [size, e] : fact) j["factorization"].push_back(Json{{"size", size}, {"exponent", e}});
    emit(j);
    return 0;
  }
  std::cout << "lambda: " << to_string(lam) << "\n";
  std::cout << "polymatroidal: " << bool_str(ex.polymatroidal) << "\n";
  std::cout << "sep_type: " << sep.shape << " (holds: " << bool_str(sep.holds) << ")\n";
  std::cout << "transversal: " << bool_str(tr.transversal) << "\n";
  std::cout << "lattice_path: " << bool_str(tr.lattice_path) << "\n";
  std::cout << "factorization: " << fact_str() << "\n";
  return 0;
}

// ---- toric ----

struct ToricArgs {
  std::string ideal, lambda;
  int kmax = 3;
  bool quadrics = false, json = false;
  bool fiber_type = false;
  int dmax = 2;
  bool volume = false;
};

int run_toric(const ToricArgs& a) {
  SymmetricIdeal I = input_ideal(a.ideal, a.lambda);
  const QuadricSet Q = exchange_quadrics(I);
  const QuadraticGenerationReport R = check_quadratic_generation(I, a.kmax);
  std::optional<FiberTypeReport> F;
  if (a.fiber_type) F = fiber_type_check(I, a.dmax, a.kmax);
  std::optional<EhrhartReport> E;
  std::optional<Rat> vol;
  if (a.volume) {
    if (!is_principal_borel(I))
      throw std::invalid_argument("--volume: needs a principal Borel ideal (a single lattice polytope)");
    const Partition lam = borel_generators(I)[0];
    E = ehrhart(lam, std::max(a.kmax, static_cast<int>(lam.size())));
    vol = normalized_volume(lam);
  }
  int code = R.truncated || (F && F->truncated) ? 3 : 0;
  if (a.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = I.n;
    j["generators"] = static_cast<long long>(Q.gens.size());
    j["quadric_count"] = static_cast<long long>(Q.quadrics.size());
    if (a.quadrics) {
      j["quadrics"] = Json::array();
      for (const auto& q : Q.quadrics)
        j["quadrics"].push_back(Json::array({Json::array({q.lhs[0] + 1, q.lhs[1] + 1}),
                                             Json::array({q.rhs[0] + 1, q.rhs[1] + 1})}));
    }
    Json counts = Json::object();
    for (const auto& [deg, cnt] : R.minimal_relation_counts) counts[std::to_string(deg)] = cnt;
    j["minimal_relation_counts"] = counts;
    j["generated_by_quadrics_up_to"] = R.generated_by_quadrics_up_to;
    j["truncated"] = R.truncated;
    if (R.truncated) j["truncated_at"] = R.truncated_at;
    if (F) {
      Json fj;
      fj["relation_count"] = F->relation_count;
      fj["certified"] = F->certified;
      fj["cells"] = Json::array();
      for (const auto& c : F->cells)
        fj["cells"].push_back(Json{{"d", c.d}, {"k", c.k}, {"fibers", c.fibers}, {"connected", c.connected}});
      j["fiber_type"] = fj;
    }
    if (E) {
      Json ej;
      ej["counts"] = E->counts;
      ej["coefficients"] = Json::array();
      for (int i = 0; i <= E->polynomial.degree(); ++i)
        ej["coefficients"].push_back(rat_str(E->polynomial.coeff(i)));
      j["ehrhart"] = ej;
      j["normalized_volume"] = rat_str(*vol);
    }
    emit(j);
    return code;
  }
  std::cout << "generators: " << Q.gens.size() << "\n";
  std::cout << "quadrics: " << Q.quadrics.size() << "\n";
  if (a.quadrics)
    for (const auto& q : Q.quadrics)
      std::cout << "  T" << q.lhs[0] + 1 << "*T" << q.lhs[1] + 1 << " = T" << q.rhs[0] + 1 << "*T"
                << q.rhs[1] + 1 << "\n";
  std::cout << "new minimal relations:";
  {
    bool first = true;
    for (const auto& [deg, cnt] : R.minimal_relation_counts) {
      std::cout << (first ? " " : ", ") << "deg" << deg << "=" << cnt;
      first = false;
    }
  }
  std::cout << "\n";
  std::cout << "generated_by_quadrics_up_to: " << R.generated_by_quadrics_up_to << "\n";
  if (R.truncated) std::cout << "truncated_at: " << R.truncated_at << "\n";
  if (F) {
    std::cout << "fiber_type: relations=" << F->relation_count << ", certified=" << bool_str(F->certified)
              << "\n";
    for (const auto& c : F->cells)
      std::cout << "  bidegree (" << c.d << "," << c.k << "): fibers=" << c.fibers
                << ", connected=" << bool_str(c.connected) << "\n";
  }
  if (E) {
    std::cout << "ehrhart_counts:";
    for (size_t i = 0; i < E->counts.size(); ++i) std::cout << (i ? ", " : " ") << E->counts[i];
    std::cout << "\n";
    std::cout << "normalized_volume: " << rat_str(*vol) << "\n";
  }
  return code;
}

// ---- oracle-verify ----

struct VerifyArgs {
  unsigned long long seed = 42;
  int cases = 25;
  int nmax = 4;
  int degmax = 6;
  bool json = false;
};

struct SuiteCheck {
  std::string name;
  int ran = 0;
  int failed = 0;
  std::string detail;  // first failure
};

Partition random_partition(std::mt19937_64& rng, int n, int degmax) {
  std::uniform_int_distribution<int> part(0, std::max(1, degmax / n + 1));
  Partition lam(n);
  for (auto& v : lam) v = part(rng);
  std::sort(lam.begin(), lam.end());
  while (total_of(lam) > degmax) {
    for (auto& v : lam)
      if (v > 0) {
        --v;
        break;
      }
  }
  return lam;
}

SymmetricIdeal random_symideal(std::mt19937_64& rng, int n, int degmax, bool strongly) {
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<Partition> ps;
  const int c = count(rng);
  for (int i = 0; i < c; ++i) ps.push_back(random_partition(rng, n, degmax));
  if (strongly) return sss_closure(n, ps);
  return from_partitions(n, ps);
}

int run_oracle_verify(const VerifyArgs& a) {
  if (a.cases < 1 || a.nmax < 2 || a.degmax < 1)
    throw std::invalid_argument("oracle-verify: need --cases >= 1, --nmax >= 2, --degmax >= 1");
  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<int> npick(2, a.nmax);
  std::vector<SuiteCheck> checks;

  auto run_suite = [&](const std::string& name, auto&& body) {
    SuiteCheck ck{name, 0, 0, ""};
    for (int t = 0; t < a.cases; ++t) {
      ++ck.ran;
      try {
        body(rng);
      } catch (const BudgetExceeded&) {
        --ck.ran;  // capped case: not evidence either way
      } catch (const std::exception& e) {
        ++ck.failed;
        if (ck.detail.empty()) ck.detail = e.what();
      }
    }
    checks.push_back(std::move(ck));
  };

  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw VerificationFailure(msg);
  };

  run_suite("add", [&](std::mt19937_64& r) {
    const int n = npick(r);
    auto I = random_symideal(r, n, a.degmax, false), J = random_symideal(r, n, a.degmax, false);
    require(expand(add(I, J)) == sum(expand(I), expand(J)), "add mismatch");
  });
  run_suite("intersect", [&](std::mt19937_64& r) {
    const int n = npick(r);
    const bool ss = r() % 2 == 0;
    auto I = random_symideal(r, n, a.degmax, ss), J = random_symideal(r, n, a.degmax, ss);
    require(expand(intersect(I, J)) == intersect(expand(I), expand(J)), "intersect mismatch");
  });
  run_suite("multiply", [&](std::mt19937_64& r) {
    const int n = npick(r);
    const bool ss = r() % 2 == 0;
    auto I = random_symideal(r, n, a.degmax, ss), J = random_symideal(r, n, a.degmax, ss);
    require(expand(multiply(I, J)) == product(expand(I), expand(J)), "multiply mismatch");
  });
  run_suite("power", [&](std::mt19937_64& r) {
    const int n = npick(r);
    auto I = random_symideal(r, n, a.degmax, r() % 2 == 0);
    const int k = 1 + static_cast<int>(r() % 3);
    require(expand(power(I, k)) == power(expand(I), k), "power mismatch");
  });
  run_suite("saturate", [&](std::mt19937_64& r) {
    const int n = npick(r);
    auto I = random_symideal(r, n, a.degmax, true);
    const int c = 1 + static_cast<int>(r() % n);
    require(expand(saturate_veronese(I, c)) == saturation(expand(I), expand(squarefree_veronese(n, c))),
            "saturate mismatch");
  });
  run_suite("radical", [&](std::mt19937_64& r) {
    const int n = npick(r);
    auto I = random_symideal(r, n, a.degmax, r() % 2 == 0);
    if (I.is_zero() || I.is_unit()) return;
    require(expand(radical(I)) == radical(expand(I)), "radical mismatch");
  });
  run_suite("symbolic-power", [&](std::mt19937_64& r) {
    const int n = npick(r);
    Partition lam = random_partition(r, n, a.degmax);
    if (total_of(lam) == 0) lam.back() = 1;
    auto I = sss_closure(n, {lam});
    const int m = 1 + static_cast<int>(r() % 3);
    const int jp = min_index(lam);
    auto closed = vs_ideal(n, jp, Int(m) * lam[jp - 1]);
    require(expand(closed) == symbolic_power(expand(I), m, SymbolicMode::Min), "symbolic-power mismatch");
  });
  run_suite("betti-hilbert", [&](std::mt19937_64& r) {
    const int n = npick(r);
    auto I = random_symideal(r, n, a.degmax, true);
    if (I.is_zero() || I.is_unit()) return;
    require(numerator_from_betti(betti(I)) == hilbert_numerator(expand(I)), "betti numerator mismatch");
  });
  run_suite("decompose", [&](std::mt19937_64& r) {
    const int n = npick(r);
    Partition lam = random_partition(r, n, a.degmax);
    if (total_of(lam) == 0) lam.back() = 1;
    const int k = 1 + static_cast<int>(r() % 2);
    verify_power_decomposition(principal_decomposition(lam, k));
  });
  run_suite("membership", [&](std::mt19937_64& r) {
    const int n = npick(r);
    Partition lam = random_partition(r, n, a.degmax);
    if (total_of(lam) == 0) lam.back() = 1;
    auto I = sss_closure(n, {lam});
    auto E = expand(I);
    std::uniform_int_distribution<Int> coord(0, lam.back());
    Exponent e(n);
    for (auto& v : e) v = coord(r);
    require(contains(I, e) == contains(E, e), "membership mismatch");
    if (total_of(e) == total_of(lam))
      require(permutohedron_contains(lam, e) ==
                  std::binary_search(E.gens.begin(), E.gens.end(), e),
              "polytope membership mismatch");
  });

  bool any_failed = false;
  for (const auto& ck : checks) any_failed |= ck.failed > 0;
  if (a.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = a.seed;
    j["cases"] = a.cases;
    j["checks"] = Json::array();
    for (const auto& ck : checks) {
      Json cj{{"name", ck.name}, {"ran", ck.ran}, {"failed", ck.failed}};
      if (!ck.detail.empty()) cj["detail"] = ck.detail;
      j["checks"].push_back(cj);
    }
    j["result"] = any_failed ? "FAIL" : "PASS";
    emit(j);
  } else {
    for (const auto& ck : checks) {
      std::cout << ck.name << ": " << (ck.failed ? "FAIL" : "PASS") << " (" << ck.ran << " cases)";
      if (!ck.detail.empty()) std::cout << " — " << ck.detail;
      std::cout << "\n";
    }
    std::cout << "result: " << (any_failed ? "FAIL" : "PASS") << "\n";
  }
  return any_failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symshift: exact computations with symmetric shifted monomial ideals"};
  app.require_subcommand(1);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "report shiftedness and structure of an ideal");
  check->add_option("--ideal", ca.ideal, "ideal JSON file ({\"n\":..., \"generators\":[[...]]})");
  check->add_option("--lambda", ca.lambda, "inline partition; the ideal is its closure Sss({lambda})");
  check->add_flag("--json", ca.json, "JSON output");

  OpArgs oa;
  auto* op = app.add_subcommand("op", "apply an ideal operation");
  op->add_option("--op", oa.op, "operation")
      ->required()
      ->check(CLI::IsMember(
          {"add", "intersect", "multiply", "power", "saturate", "radical", "symbolic-power"}));
  op->add_option("--ideal", oa.ideal, "first operand (JSON file)");
  op->add_option("--lambda", oa.lambda, "first operand (inline partition)");
  op->add_option("--other", oa.other, "second operand (JSON file)");
  op->add_option("--mu", oa.mu, "second operand (inline partition)");
  op->add_option("--k", oa.k, "exponent for power");
  op->add_option("--c", oa.c, "height for saturate");
  op->add_option("--m", oa.m, "exponent for symbolic-power");
  op->add_option("--mode", oa.mode, "symbolic-power prime set")->check(CLI::IsMember({"min", "ass"}));
  op->add_flag("--oracle", oa.oracle, "force the expanded oracle route");
  op->add_flag("--verify", oa.verify, "run both routes and compare");
  op->add_flag("--json", oa.json, "JSON output");
  op->add_option("--out", oa.out, "write the result envelope to this file");

  InvArgs ia;
  auto* inv = app.add_subcommand("invariants", "homological and asymptotic invariants");
  inv->add_option("--ideal", ia.ideal, "ideal JSON file");
  inv->add_option("--lambda", ia.lambda, "inline partition; the ideal is its closure");
  inv->add_option("--kmax", ia.kmax, "largest power for the depth/Ass tables");
  inv->add_flag("--json", ia.json, "JSON output");

  DecompArgs da;
  auto* dec = app.add_subcommand("decompose", "irredundant decomposition of a principal power");
  dec->add_option("--lambda", da.lambda, "partition generator")->required();
  dec->add_option("--k", da.k, "power");
  dec->add_flag("--verify", da.verify, "check the decomposition against the expanded oracle");
  dec->add_flag("--json", da.json, "JSON output");

  PolyArgs pa;
  auto* pol = app.add_subcommand("polymatroid", "polymatroidal classification of a principal ideal");
  pol->add_option("--lambda", pa.lambda, "partition generator")->required();
  pol->add_flag("--json", pa.json, "JSON output");

  ToricArgs ta;
  auto* tor = app.add_subcommand("toric", "fiber-cone relations and toric certificates");
  tor->add_option("--ideal", ta.ideal, "ideal JSON file");
  tor->add_option("--lambda", ta.lambda, "inline partition; the ideal is its closure");
  tor->add_option("--kmax", ta.kmax, "largest relation degree to scan");
  tor->add_flag("--quadrics", ta.quadrics, "list the exchange quadrics");
  tor->add_flag("--fiber-type", ta.fiber_type, "certify Rees fibers up to --dmax/--kmax");
  tor->add_option("--dmax", ta.dmax, "largest x-degree for --fiber-type");
  tor->add_flag("--volume", ta.volume, "Ehrhart data and normalized volume (principal only)");
  tor->add_flag("--json", ta.json, "JSON output");

  VerifyArgs va;
  auto* ver = app.add_subcommand("oracle-verify", "randomized differential suite against the oracle");
  ver->add_option("--seed", va.seed, "RNG seed");
  ver->add_option("--cases", va.cases, "cases per check");
  ver->add_option("--nmax", va.nmax, "largest ambient dimension");
  ver->add_option("--degmax", va.degmax, "largest generator degree");
  ver->add_flag("--json", va.json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(ca);
    if (*op) return run_op(oa);
    if (*inv) return run_invariants(ia);
    if (*dec) return run_decompose(da);
    if (*pol) return run_polymatroid(pa);
    if (*tor) return run_toric(ta);
    if (*ver) return run_oracle_verify(va);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
