#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "frobq/workbench.hpp"

namespace {

using namespace frobq;
using nlohmann::ordered_json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

struct Options {
  std::string ring_path;
  std::string builtin;
  std::optional<std::uint32_t> characteristic;
  bool json = false;

  std::string ideal;
  std::string other;
  std::string poly;
  std::string seq;
  std::string exps;
  std::string subset;
  std::string nil;
  std::string suite;
  std::string length = "all";
  std::uint32_t e = 1;
  std::uint32_t e_max = 4;
  std::uint32_t lookahead = 2;
  std::uint32_t n_max = 3;
  std::uint32_t max_degree = 1;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  bool closed_form = false;
};

struct Context {
  QuotientRing ring;
  std::string name;
};

Context open_ring(const Options& o) {
  if (!o.ring_path.empty() && !o.builtin.empty()) {
    throw InvalidArgument("give either --ring or --builtin, not both");
  }
  if (!o.ring_path.empty()) {
    RingDescription desc = read_ring_file(o.ring_path);
    if (o.characteristic) desc.p = *o.characteristic;
    return {make_quotient_ring(desc), desc.name};
  }
  if (!o.builtin.empty()) {
    RingDescription desc = builtin_ring(o.builtin, o.characteristic);
    return {make_quotient_ring(desc), desc.name};
  }
  throw InvalidArgument("a ring is required: use --ring <path> or --builtin <name>");
}

Ideal ideal_arg(const Context& ctx, const std::string& text) {
  return ctx.ring.ideal(text);
}

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    unsigned long v = std::stoul(item, &used);
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

SequenceSpec sequence_arg(const Context& ctx, const Options& o) {
  if (o.seq.empty()) throw InvalidArgument("--seq is required");
  return SequenceSpec(ctx.ring, parse_polynomial_list(o.seq, ctx.ring.ambient()),
                      parse_list(o.exps));
}

IndexSet subset_arg(const SequenceSpec& x, const std::string& text, IndexSet fallback) {
  if (text.empty()) return fallback;
  if (text == "none" || text == "{}") return 0;
  IndexSet set = 0;
  for (std::uint32_t i : parse_list(text)) {
    if (i == 0 || i > x.length()) {
      throw InvalidArgument("subset index " + std::to_string(i) + " is out of range");
    }
    set |= IndexSet{1} << (i - 1);
  }
  return set;
}

SurveyConfig survey_config(const Options& o) {
  SurveyConfig cfg;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.max_degree = o.max_degree;
  if (o.length != "all") cfg.length = std::stoul(o.length);
  cfg.e_max = o.e_max;
  cfg.lookahead = o.lookahead;
  cfg.n_max = o.n_max;
  return cfg;
}

void print_ideal(const Options& o, const std::string& label, const Ideal& ideal,
                 ordered_json extra = ordered_json::object()) {
  if (o.json) {
    ordered_json j;
    j[label] = ideal_strings(ideal);
    j.update(extra);
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << ideal.to_string() << "\n";
  for (auto& [key, value] : extra.items()) std::cout << key << ": " << value.dump() << "\n";
}

int print_verdict(const Options& o, const std::string& label, bool value,
                  ordered_json extra = ordered_json::object()) {
  if (o.json) {
    ordered_json j;
    j[label] = value;
    j.update(extra);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (value ? "true" : "false") << "\n";
    for (auto& [key, v] : extra.items()) std::cout << key << ": " << v.dump() << "\n";
  }
  return value ? kTrue : kFalse;
}

ordered_json closure_json(const ClosureResult& c) {
  ordered_json j;
  j["closure"] = ideal_strings(c.closure);
  j["stabilized"] = c.stabilized;
  j["e_star"] = c.e_star;
  j["certified_lower"] = c.certified_lower;
  j["window"] = c.window;
  ordered_json chain = ordered_json::array();
  for (const auto& f : c.chain) chain.push_back(ideal_strings(f));
  j["chain"] = std::move(chain);
  return j;
}

int run(const std::string& command, const Options& o) {
  Context ctx = open_ring(o);
  const QuotientRing& R = ctx.ring;
  auto ideal = [&] { return o.ideal.empty() ? R.relations() : ideal_arg(ctx, o.ideal); };

  if (command == "gb") {
    print_ideal(o, "basis", ideal());
  } else if (command == "member") {
    if (o.poly.empty()) throw InvalidArgument("--poly is required");
    return print_verdict(o, "member",
                         ideal_member(parse_polynomial(o.poly, R.ambient()), ideal()));
  } else if (command == "colon") {
    if (o.other.empty()) throw InvalidArgument("--by is required");
    print_ideal(o, "colon", colon(ideal(), Ideal::parse(o.other, R.ambient())));
  } else if (command == "intersect") {
    if (o.other.empty()) throw InvalidArgument("--with is required");
    print_ideal(o, "intersection", intersect(ideal(), ideal_arg(ctx, o.other)));
  } else if (command == "sat") {
    if (o.other.empty()) throw InvalidArgument("--by is required");
    Saturation s = saturate(ideal(), Ideal::parse(o.other, R.ambient()));
    print_ideal(o, "saturation", s.ideal, {{"index", s.index}});
  } else if (command == "dim") {
    int d = krull_dimension(ideal());
    if (o.json) {
      std::cout << ordered_json{{"dimension", d}}.dump(2) << "\n";
    } else {
      std::cout << d << "\n";
    }
  } else if (command == "fpower") {
    print_ideal(o, "frobenius_power", frobenius_power(ideal(), o.e, R),
                {{"e", o.e}, {"q", FrobeniusExponent::make(R.characteristic(), o.e).q}});
  } else if (command == "froot") {
    print_ideal(o, "frobenius_root", frobenius_root(ideal(), o.e),
                {{"e", o.e}, {"q", FrobeniusExponent::make(R.characteristic(), o.e).q}});
  } else if (command == "fclosure") {
    ClosureResult c = frobenius_closure(ideal(), R, {o.e_max, o.lookahead});
    if (o.json) {
      std::cout << closure_json(c).dump(2) << "\n";
    } else {
      std::cout << c.closure.to_string() << "\n"
                << "stabilized: " << (c.stabilized ? "true" : "false") << "\n"
                << "e_star: " << c.e_star << "\n"
                << "certified_lower: " << (c.certified_lower ? "true" : "false") << "\n"
                << "window: " << c.window << "\n";
    }
    return c.stabilized ? kTrue : kError;
  } else if (command == "qexp") {
    QExponent q = q_exponent(ideal(), R, {o.e_max, o.lookahead});
    ordered_json j = closure_json(q.closure);
    j.erase("chain");
    const char* status = q.status == QStatus::Found      ? "found"
                         : q.status == QStatus::NotFound ? "not-found"
                                                         : "unstabilized";
    j["status"] = status;
    if (q.status == QStatus::Found) {
      j["q_exponent"] = q.exponent.e;
      j["q"] = q.exponent.q;
    }
    if (o.json) {
      std::cout << j.dump(2) << "\n";
    } else if (q.status == QStatus::Found) {
      std::cout << "Q = " << q.exponent.q << " = " << R.characteristic() << "^"
                << q.exponent.e << "\n";
    } else {
      std::cout << status << "\n";
    }
    return q.status == QStatus::Found ? kTrue : kError;
  } else if (command == "dseq") {
    auto check = is_d_sequence(sequence_arg(ctx, o));
    ordered_json extra = ordered_json::object();
    if (check.violation) {
      extra["violation"] = {{"j", check.violation->first}, {"k", check.violation->second}};
    }
    return print_verdict(o, "d_sequence", check.holds, extra);
  } else if (command == "usd") {
    auto check = is_usd_bounded(sequence_arg(ctx, o), o.n_max);
    ordered_json extra = {{"n_max", o.n_max}};
    if (check.witness) {
      std::vector<std::size_t> order;
      for (auto i : check.witness->order) order.push_back(i + 1);
      extra["witness"] = {{"order", order},
                          {"exponents", check.witness->exponents},
                          {"j", check.witness->violation.first},
                          {"k", check.witness->violation.second}};
    }
    return print_verdict(o, "passes_box", check.passes, extra);
  } else if (command == "filtreg") {
    return print_verdict(o, "filter_regular", is_filter_regular(sequence_arg(ctx, o)));
  } else if (command == "unmixed") {
    SequenceSpec x = sequence_arg(ctx, o);
    UnmixedPart un = unmixed_part(x, subset_arg(x, o.subset, 0));
    if (un.colon_by_zero && !o.json) std::cerr << "warning: colon by the zero ideal\n";
    print_ideal(o, "unmixed_part", un.ideal, {{"colon_by_zero", un.colon_by_zero}});
  } else if (command == "limideal") {
    SequenceSpec x = sequence_arg(ctx, o);
    if (o.closed_form) {
      print_ideal(o, "limit_ideal_closed_form", limit_ideal_closed_form(x));
      return kTrue;
    }
    LimitIdeal lim = limit_ideal(x, subset_arg(x, o.subset, x.all()));
    print_ideal(o, "limit_ideal", lim.ideal,
                {{"stabilized", lim.stabilized}, {"j_star", lim.j_star}});
    return lim.stabilized ? kTrue : kError;
  } else if (command == "verify") {
    std::optional<SequenceSpec> x;
    if (!o.seq.empty()) x = sequence_arg(ctx, o);
    std::optional<Ideal> nil;
    if (!o.nil.empty()) nil = ideal_arg(ctx, o.nil);
    SuiteResult result = run_suite(o.suite, R, x, survey_config(o), nil);
    if (o.json) {
      std::cout << result.report.dump(2) << "\n";
    } else {
      std::cout << o.suite << ": "
                << (result.passed ? "pass" : result.indeterminate ? "indeterminate" : "fail")
                << "\n"
                << result.report.dump(2) << "\n";
    }
    if (result.indeterminate) return kError;
    return result.passed ? kTrue : kFalse;
  } else if (command == "survey-q") {
    QReport report = survey_uniform_q(R, survey_config(o), ctx.name);
    if (o.json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << "ring " << ctx.name << " (p = " << report.p << ", dim = "
                << report.dimension << "), " << report.records.size() << " samples\n";
      for (const auto& rec : report.records) {
        std::string gens;
        for (const auto& g : rec.generators) gens += (gens.empty() ? "" : "; ") + g;
        std::cout << "  (" << gens << "): " << rec.status;
        if (rec.status == "found") std::cout << ", Q = " << rec.q << ", e* = " << rec.e_star;
        std::cout << "\n";
      }
      if (report.max_q_exponent) {
        std::cout << "max Q = " << report.p << "^" << *report.max_q_exponent << "\n";
      } else {
        std::cout << "max Q: none certified\n";
      }
      std::cout << "indeterminate: " << report.indeterminate
                << ", failures: " << report.failures << "\n";
    }
    return report.indeterminate == 0 && report.failures == 0 ? kTrue : kError;
  }
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius closures, test exponents and d-sequence identities over F_p"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--ring", o.ring_path, "Ring file (char / vars / rel lines)");
  app.add_option("--builtin", o.builtin, "Built-in ring: REG, TWOPLANES, NILLINE, FERMAT3, CROSS");
  app.add_option("--char", o.characteristic, "Override the characteristic");
  app.add_flag("--json", o.json, "Machine-readable output");

  auto sub = [&](const std::string& name, const std::string& help) {
    return app.add_subcommand(name, help);
  };
  auto with_ideal = [&](CLI::App* c) {
    c->add_option("--ideal", o.ideal, "Generators separated by ';' (J is adjoined)");
  };
  auto with_seq = [&](CLI::App* c) {
    c->add_option("--seq", o.seq, "Sequence elements separated by ';'")->required();
    c->add_option("--exps", o.exps, "Exponents n1,n2,...");
  };
  auto with_chain = [&](CLI::App* c) {
    c->add_option("--emax", o.e_max, "Largest Frobenius exponent examined");
    c->add_option("--lookahead", o.lookahead, "Consecutive equal chain members required");
  };
  auto with_survey = [&](CLI::App* c) {
    c->add_option("--samples", o.samples, "Number of samples");
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--length", o.length, "Subsystem length, or 'all'");
    c->add_option("--maxdeg", o.max_degree, "Largest degree of sampled elements");
    c->add_option("--nmax", o.n_max, "Exponent box for USD checks");
    with_chain(c);
  };

  auto* gb = sub("gb", "Reduced Groebner basis");
  with_ideal(gb);
  auto* member = sub("member", "Ideal membership");
  with_ideal(member);
  member->add_option("--poly", o.poly, "Polynomial")->required();
  auto* col = sub("colon", "Colon ideal (I : K)");
  with_ideal(col);
  col->add_option("--by", o.other, "Divisor generators")->required();
  auto* inter = sub("intersect", "Intersection of two ideals");
  with_ideal(inter);
  inter->add_option("--with", o.other, "Second ideal")->required();
  auto* sat = sub("sat", "Saturation (I : K^inf)");
  with_ideal(sat);
  sat->add_option("--by", o.other, "Divisor generators")->required();
  auto* dim = sub("dim", "Krull dimension of S/I");
  with_ideal(dim);
  auto* fpow = sub("fpower", "Frobenius power I^[q] + J");
  with_ideal(fpow);
  fpow->add_option("--e", o.e, "Exponent e, q = p^e");
  auto* froot = sub("froot", "Frobenius root I^[1/q]");
  with_ideal(froot);
  froot->add_option("--e", o.e, "Exponent e, q = p^e");
  auto* fcl = sub("fclosure", "Frobenius closure chain");
  with_ideal(fcl);
  with_chain(fcl);
  auto* qexp = sub("qexp", "Frobenius test exponent Q(a)");
  with_ideal(qexp);
  with_chain(qexp);
  auto* dseq = sub("dseq", "d-sequence test");
  with_seq(dseq);
  auto* usd = sub("usd", "Bounded unconditioned strong d-sequence test");
  with_seq(usd);
  usd->add_option("--nmax", o.n_max, "Exponent box");
  auto* filt = sub("filtreg", "Filter-regular sequence test");
  with_seq(filt);
  auto* unm = sub("unmixed", "Unmixed part of a partial power ideal");
  with_seq(unm);
  unm->add_option("--subset", o.subset, "1-based positions, e.g. 1,3 (default none)");
  auto* lim = sub("limideal", "Limit ideal");
  with_seq(lim);
  lim->add_option("--subset", o.subset, "1-based positions (default all)");
  lim->add_flag("--closed-form", o.closed_form, "Use the closed form for USD sequences");
  auto* ver = sub("verify", "Run a check suite: gy, huneke, br21, fixedq, nil");
  ver->add_option("suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"gy", "huneke", "br21", "fixedq", "nil"}));
  ver->add_option("--seq", o.seq, "Sequence elements (default: search for one)");
  ver->add_option("--exps", o.exps, "Exponents n1,n2,...");
  ver->add_option("--nil", o.nil, "Nilpotent ideal for the nil suite");
  with_survey(ver);
  auto* survey = sub("survey-q", "Uniform Frobenius test exponent survey");
  with_survey(survey);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
