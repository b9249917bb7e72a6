#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "circle5/abgroup.hpp"
#include "circle5/classify.hpp"
#include "circle5/cohomology.hpp"
#include "circle5/construct.hpp"
#include "circle5/orbit_local.hpp"
#include "circle5/sasakian.hpp"
#include "circle5/seifert.hpp"

namespace circle5::cli {

namespace {

enum class Format { kJson, kText };

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Format format = Format::kJson;
};

std::string read_all(std::istream& s) {
  return {std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    text = read_all(f);
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + " (byte " + std::to_string(e.byte) + ")");
  }
}

void emit(Context& ctx, const Json& j, const std::string& text) {
  if (ctx.format == Format::kJson) {
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << text;
  }
}

std::vector<BigInt> parse_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw InputError("empty entry in list '" + text + "'");
    out.push_back(parse_bigint(item));
  }
  return out;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- classify / gate

int cmd_classify(Context& ctx, const std::string& input) {
  const FiveManifoldClass c = class_from_json(read_json(input, ctx.in));
  const bool valid = validate_i(c.h2, c.i);
  const bool realizable = valid && smale_barden_realizable(c);
  Json j;
  j["class"] = to_json(c);
  j["valid_i"] = valid;
  j["realizable"] = realizable;
  emit(ctx, j,
       "H2 = " + to_string(c.h2) + ", i = " + to_string(c.i) + "\nvalid i: " + yes_no(valid) +
           "\nrealizable: " + yes_no(realizable) + "\n");
  return realizable ? kAffirmative : kNegative;
}

std::string verdict_text(const GateVerdict& v) {
  if (v.admissible) return "admissible\n";
  std::string s = "inadmissible:";
  for (auto r : v.violated_rules) s += " " + to_string(r);
  return s + "\n";
}

int cmd_gate(Context& ctx, const std::string& input) {
  const FiveManifoldClass c = class_from_json(read_json(input, ctx.in));
  const GateVerdict v = circle_action_admissible(c);
  emit(ctx, to_json(v), verdict_text(v));
  return v.admissible ? kAffirmative : kNegative;
}

// ---- construct / verify

std::string spec_text(const SeifertSpec& spec) {
  std::ostringstream s;
  s << "base: " << spec.base.charts << "#CP2\n";
  for (const auto& d : spec.divisors) {
    s << "  chart " << d.chart << ": m=" << to_string(d.m) << " b=" << to_string(d.b);
    if (const auto* o = std::get_if<Orientable>(&d.surface)) {
      s << " genus " << to_string(o->genus);
    } else {
      s << " nonorientable b1=" << to_string(std::get<Nonorientable>(d.surface).b1);
    }
    if (d.h2_class) s << " class (" << join(*d.h2_class) << ")";
    s << "\n";
  }
  s << "twist: (" << join(spec.twist) << ")\n";
  return s.str();
}

std::string report_text(const CohomologyReport& r) {
  std::ostringstream s;
  s << "|H1|: " << (r.h1.known ? (r.h1.order == 0 ? std::string("infinite") : to_string(r.h1.order))
                               : "unknown, nonzero (>= " + to_string(r.h1.lower_bound->torsion_order()) + ")")
    << "\n";
  s << "H2: " << (r.h2 ? to_string(*r.h2) : std::string("-")) << "\n";
  s << "H3 torsion: " << (r.h3_torsion ? to_string(*r.h3_torsion) : std::string("-")) << "\n";
  std::vector<std::string> c1;
  for (const auto& x : r.c1) c1.push_back(to_string(x));
  s << "c1(L/X): (";
  for (std::size_t i = 0; i < c1.size(); ++i) s << (i ? ", " : "") << c1[i];
  s << ")\nc1(L/mu): (" << join(r.c1_mu) << ")\n";
  s << "wu: " << (r.wu ? to_string(*r.wu) : std::string("-")) << "\n";
  s << "simply connected: "
    << (r.simply_connected ? yes_no(*r.simply_connected) : std::string("no certificate")) << "\n";
  return s.str();
}

int cmd_construct(Context& ctx, const std::string& input, const std::string& target, bool verify) {
  Json j = read_json(input, ctx.in);
  if (!target.empty()) {
    if (!j.is_object()) throw InputError("class: expected a JSON object");
    j["i"] = to_json(parse_wu(target));
  }
  if (j.is_object() && !j.contains("i")) throw InputError("construct: give --target-i or an \"i\" field");
  const ConstructionInput in = input_from_class(class_from_json(j));
  try {
    if (!verify) {
      const SeifertSpec spec = build(in);
      emit(ctx, to_json(spec), spec_text(spec));
      return kAffirmative;
    }
    const RoundTrip rt = verify_roundtrip(in);
    Json out;
    out["spec"] = to_json(rt.spec);
    out["report"] = to_json(rt.report);
    out["verified"] = true;
    emit(ctx, out, spec_text(rt.spec) + report_text(rt.report) + "verified\n");
    return kAffirmative;
  } catch (const InadmissibleInput& e) {
    emit(ctx, to_json(e.verdict()), verdict_text(e.verdict()));
    return kNegative;
  }
}

WuValue expected_wu(WuInvariant i) {
  if (i.is_infinite()) return WuValue::kInfinity;
  if (i.value() == 0) return WuValue::kZero;
  if (i.value() == 1) return WuValue::kOne;
  return WuValue::kIndeterminate;
}

int cmd_verify(Context& ctx, const std::string& input, const std::string& expect_path) {
  const SeifertSpec spec = spec_from_json(read_json(input, ctx.in));
  const CohomologyReport r = full_report(spec);
  if (expect_path.empty()) {
    emit(ctx, to_json(r), report_text(r));
    return kAffirmative;
  }
  std::ifstream f(expect_path);
  if (!f) throw InputError("cannot open " + expect_path);
  const FiveManifoldClass expected = class_from_json(read_json(expect_path, f));

  Json mismatches = Json::array();
  Json undecided = Json::array();
  std::string diff;
  auto mismatch = [&](const char* field, Json want, Json got) {
    diff += std::string(field) + ": expected " + want.dump() + ", got " + got.dump() + "\n";
    Json m;
    m["field"] = field;
    m["expected"] = std::move(want);
    m["actual"] = std::move(got);
    mismatches.push_back(std::move(m));
  };
  const Json report = to_json(r);
  if (!r.h1.is_trivial()) mismatch("h1_order", 1, report["h1_order"]);
  if (!r.h2 || !is_isomorphic(*r.h2, expected.h2)) {
    mismatch("h2", to_json(expected.h2), report["h2"]);
  }
  if (r.wu) {
    if (*r.wu == WuValue::kIndeterminate) {
      undecided.push_back("i");
      diff += "i: expected " + to_string(expected.i) + ", engine indeterminate\n";
    } else if (*r.wu != expected_wu(expected.i)) {
      mismatch("i", to_json(expected.i), report["wu"]);
    }
  }
  Json out;
  out["report"] = report;
  out["match"] = mismatches.empty() && undecided.empty();
  out["mismatches"] = mismatches;
  out["undecided"] = undecided;
  emit(ctx, out, report_text(r) + (diff.empty() ? "match\n" : diff));
  if (!mismatches.empty()) return kNegative;
  return undecided.empty() ? kAffirmative : kIndeterminate;
}

// ---- local

int cmd_local(Context& ctx, const std::string& m_text, const std::string& exps) {
  const StabilizerRep rep(parse_bigint(m_text), parse_list(exps));
  const LocalInvariants inv = local_invariants(rep);
  Json j;
  j["m"] = bigint_to_json(rep.order());
  Json e = Json::array();
  for (const auto& x : rep.exponents()) e.push_back(bigint_to_json(x));
  j["exponents"] = e;
  Json canon = Json::array();
  const StabilizerRep canonical = rep.canonical();
  for (const auto& x : canonical.exponents()) canon.push_back(bigint_to_json(x));
  j["canonical_exponents"] = canon;
  j["invariants"] = to_json(inv);
  Json orbit = Json::array();
  std::string orbit_text;
  for (std::size_t i = 0; i < inv.c.size(); ++i) {
    if (inv.c[i] < 2) continue;
    const OrbitInvariant o = orbit_invariant_from_rep(inv.c[i], floor_mod(rep.exponents()[i], inv.c[i]));
    Json oj;
    oj["slot"] = i;
    oj["m"] = bigint_to_json(o.m);
    oj["b"] = bigint_to_json(o.b);
    orbit.push_back(oj);
    orbit_text += " (" + to_string(o.m) + ", " + to_string(o.b) + ")";
  }
  j["orbit_invariants"] = orbit;
  emit(ctx, j,
       "c = (" + join(inv.c) + ")\nd = (" + join(inv.d) + ")\nC = " + to_string(inv.C) +
           "\nmanifold point: " + yes_no(inv.manifold_point) + "\norbit invariants:" +
           (orbit_text.empty() ? " none" : orbit_text) + "\n");
  return kAffirmative;
}

// ---- sasaki

int cmd_sasaki(Context& ctx, const std::string& input, const std::string& values_text,
               const SasakiOptions& options) {
  std::vector<BigInt> values;
  if (!values_text.empty()) {
    values = parse_list(values_text);
  } else {
    const Json j = read_json(input, ctx.in);
    Json group = j;
    if (group.is_object()) group.erase("i");
    const FgAbelianGroup g = group_from_json(group);
    if (g.free_rank() != 0) throw InputError("sasaki: free_rank must be 0 (rational homology sphere)");
    for (const auto& [pp, c] : g.torsion()) values.push_back(c);
  }
  const SasakiReport r = sasaki_check(values, options);
  std::string text = to_string(r.status);
  if (r.witness) {
    text += ": no obstruction found, q(t) = " + to_string(r.witness->q);
    text += ", exceptions: " + (r.witness->exceptions.empty() ? std::string("none") : join(r.witness->exceptions));
  }
  if (r.densest_violation) {
    const auto& d = *r.densest_violation;
    std::ostringstream s;
    s << ": " << d.count << " values in [" << to_string(d.lo) << ", " << to_string(d.hi)
      << "] exceed 12 + 2 sqrt(" << to_string(BigInt(d.hi - d.lo)) << ") = " << d.bound;
    text += s.str();
  } else if (r.status == SasakiReport::Status::kInfeasible) {
    text += ": no quadratic covers all but " + std::to_string(r.max_exceptions) + " values";
  } else if (r.status == SasakiReport::Status::kInconclusive) {
    text += ": " + std::to_string(r.search->candidates) + " candidates exceed --max-candidates";
  }
  emit(ctx, to_json(r), text + "\n");
  switch (r.status) {
    case SasakiReport::Status::kFeasible:
      return kAffirmative;
    case SasakiReport::Status::kInfeasible:
      return kNegative;
    case SasakiReport::Status::kInconclusive:
      break;
  }
  return kIndeterminate;
}

// ---- enumerate

// Nonincreasing partitions of n.
void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

// All torsion groups of order exactly n, sorted by their (p, e, count) encoding.
std::vector<TorsionCounts> groups_of_order(const BigInt& n) {
  std::vector<TorsionCounts> groups{TorsionCounts{}};
  for (const auto& [p, a] : factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(a, a, cur, parts);
    std::vector<TorsionCounts> next;
    for (const auto& g : groups) {
      for (const auto& part : parts) {
        TorsionCounts t = g;
        for (unsigned e : part) t[PrimePower(p, e)] += 1;
        next.push_back(std::move(t));
      }
    }
    groups = std::move(next);
  }
  auto encode = [](const TorsionCounts& t) {
    std::vector<std::tuple<BigInt, unsigned, BigInt>> v;
    for (const auto& [pp, c] : t) v.emplace_back(pp.prime(), pp.exponent(), c);
    return v;
  };
  std::sort(groups.begin(), groups.end(),
            [&](const TorsionCounts& x, const TorsionCounts& y) { return encode(x) < encode(y); });
  return groups;
}

int cmd_enumerate(Context& ctx, unsigned long long max_order, std::size_t max_k) {
  const WuInvariant targets[] = {WuInvariant::finite(0), WuInvariant::finite(1), WuInvariant::infinity()};
  for (std::size_t k = 0; k <= max_k; ++k) {
    for (unsigned long long n = 1; n <= max_order; ++n) {
      for (const auto& torsion : groups_of_order(BigInt(n))) {
        for (const auto i : targets) {
          const FiveManifoldClass c{FgAbelianGroup(k, torsion), i};
          if (!circle_action_admissible(c).admissible) continue;
          const SeifertSpec spec = build(input_from_class(c));
          if (ctx.format == Format::kJson) {
            Json line;
            line["class"] = to_json(c);
            line["spec"] = to_json(spec);
            ctx.out << line.dump() << '\n';
          } else {
            ctx.out << "k=" << k << " H2=" << to_string(c.h2) << " i=" << to_string(i) << " divisors="
                    << spec.divisors.size() << " twist=(" << join(spec.twist) << ")\n";
          }
        }
      }
    }
  }
  return kAffirmative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Circle actions on simply connected 5-manifolds", "circle5"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "JSON input file (stdin when omitted or '-')");
  };

  auto* classify = app.add_subcommand("classify", "Smale-Barden realizability of a class");
  add_input(classify);
  auto* gate = app.add_subcommand("gate", "Circle-action admissibility of a class");
  add_input(gate);

  auto* construct = app.add_subcommand("construct", "Seifert bundle realizing a class");
  add_input(construct);
  std::string target;
  bool verify_flag = false;
  construct->add_option("--target-i", target, "Wu invariant to realize: 0, 1 or inf")
      ->check(CLI::IsMember({"0", "1", "inf"}));
  construct->add_flag("--verify", verify_flag, "Recompute all invariants of the result");

  auto* verify = app.add_subcommand("verify", "Invariants of a Seifert bundle");
  add_input(verify);
  std::string expect;
  verify->add_option("--expect", expect, "Class JSON file to compare against");

  auto* local = app.add_subcommand("local", "Local invariants of a stabilizer representation");
  std::string m_text, exps;
  local->add_option("--m", m_text, "Order of the stabilizer")->required();
  local->add_option("--exponents", exps, "Comma-separated exponents j_i")->required();

  auto* sasaki = app.add_subcommand("sasaki", "Quadratic coverage and density obstructions");
  add_input(sasaki);
  std::string values;
  SasakiOptions sopts;
  sasaki->add_option("--values", values, "Comma-separated values c(p^e)");
  sasaki->add_option("--max-exceptions", sopts.max_exceptions, "Values allowed off the quadratic");
  sasaki->add_option("--max-candidates", sopts.max_candidates, "Interpolation budget");

  auto* enumerate = app.add_subcommand("enumerate", "Admissible classes and their constructions");
  unsigned long long max_order = 1;
  std::size_t max_k = 0;
  enumerate->add_option("--max-torsion-order", max_order, "Largest torsion order")->required();
  enumerate->add_option("--max-k", max_k, "Largest free rank")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kError;
  }

  Context ctx{in, out, err, format == "text" ? Format::kText : Format::kJson};
  try {
    if (*classify) return cmd_classify(ctx, input);
    if (*gate) return cmd_gate(ctx, input);
    if (*construct) return cmd_construct(ctx, input, target, verify_flag);
    if (*verify) return cmd_verify(ctx, input, expect);
    if (*local) return cmd_local(ctx, m_text, exps);
    if (*sasaki) return cmd_sasaki(ctx, input, values, sopts);
    if (*enumerate) return cmd_enumerate(ctx, max_order, max_k);
  } catch (const SpecError& e) {
    err << "error: invalid Seifert spec:";
    for (const auto& issue : e.issues()) err << " " << issue.detail;
    err << "\n";
    return kError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const RoundTripFailure& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace circle5::cli
