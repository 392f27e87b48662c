#include "frobq/workbench.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

namespace frobq {

using nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

void monomials_of_degree(std::size_t nvars, std::uint32_t degree, std::size_t var,
                         std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    exps[var] = degree;
    out.emplace_back(std::span<const std::uint32_t>(exps));
    return;
  }
  for (std::uint32_t k = degree + 1; k-- > 0;) {
    exps[var] = k;
    monomials_of_degree(nvars, degree - k, var + 1, exps, out);
  }
}

Polynomial random_form(const RingPtr& ring, std::mt19937_64& rng, std::uint32_t max_degree) {
  const std::uint32_t degree = 1 + static_cast<std::uint32_t>(draw(rng, max_degree));
  std::vector<std::uint32_t> exps(ring->nvars(), 0);
  std::vector<Monomial> monos;
  monomials_of_degree(ring->nvars(), degree, 0, exps, monos);
  std::vector<Term> terms;
  for (const auto& m : monos) {
    auto c = static_cast<std::uint32_t>(draw(rng, ring->characteristic()));
    if (c != 0) terms.push_back({c, m});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<std::string> polynomial_strings(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

const char* status_name(QStatus s) {
  switch (s) {
    case QStatus::Found:
      return "found";
    case QStatus::NotFound:
      return "not-found";
    case QStatus::Unstabilized:
      return "unstabilized";
  }
  return "error";
}

ordered_json config_json(const SurveyConfig& cfg) {
  ordered_json j;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["max_degree"] = cfg.max_degree;
  if (cfg.length) {
    j["length"] = *cfg.length;
  } else {
    j["length"] = "all";
  }
  j["e_max"] = cfg.e_max;
  j["lookahead"] = cfg.lookahead;
  j["n_max"] = cfg.n_max;
  return j;
}

}  // namespace

// -------------------------------------------------------------- ring files

RingDescription parse_ring_description(std::string_view text) {
  RingDescription desc;
  bool have_char = false, have_vars = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::size_t space = line.find_first_of(" \t");
    std::string key = line.substr(0, space);
    std::string rest = space == std::string::npos ? "" : trim(line.substr(space));
    if (key == "char") {
      if (have_char) throw RingFileError("duplicate char line", line_no);
      try {
        std::size_t used = 0;
        unsigned long long p = std::stoull(rest, &used);
        if (used != rest.size() || p > PrimeField::kMaxModulus) throw std::out_of_range("p");
        desc.p = static_cast<std::uint32_t>(p);
      } catch (const std::logic_error&) {
        throw RingFileError("bad characteristic '" + rest + "'", line_no);
      }
      if (!is_prime(desc.p)) {
        throw RingFileError("modulus not prime: " + rest, line_no);
      }
      have_char = true;
    } else if (key == "vars") {
      if (have_vars) throw RingFileError("duplicate vars line", line_no);
      std::istringstream names(rest);
      for (std::string v; names >> v;) desc.variables.push_back(v);
      if (desc.variables.empty()) throw RingFileError("no variables declared", line_no);
      have_vars = true;
    } else if (key == "rel") {
      if (!have_char || !have_vars) {
        throw RingFileError("rel before char and vars", line_no);
      }
      if (rest.empty()) throw RingFileError("empty relation", line_no);
      desc.relations.push_back(rest);
    } else {
      throw RingFileError("unknown directive '" + key + "'", line_no);
    }
  }
  if (!have_char) throw RingFileError("missing char line", line_no);
  if (!have_vars) throw RingFileError("missing vars line", line_no);
  // Validate names and relations now so errors carry line numbers.
  RingPtr ring;
  try {
    ring = PolyRing::make(desc.p, desc.variables);
  } catch (const InvalidArgument& e) {
    throw RingFileError(e.what(), line_no);
  }
  std::istringstream again{std::string(text)};
  line_no = 0;
  while (std::getline(again, raw)) {
    ++line_no;
    std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.rfind("rel", 0) != 0) continue;
    try {
      parse_polynomial(trim(line.substr(3)), ring);
    } catch (const Error& e) {
      throw RingFileError(e.what(), line_no);
    }
  }
  return desc;
}

RingDescription read_ring_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open ring file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  RingDescription desc = parse_ring_description(buffer.str());
  desc.name = path.stem().string();
  return desc;
}

std::vector<std::string> builtin_ring_names() {
  return {"REG", "TWOPLANES", "NILLINE", "FERMAT3", "CROSS"};
}

RingDescription builtin_ring(std::string_view name, std::optional<std::uint32_t> p) {
  const std::string key = upper(name);
  RingDescription d;
  d.name = key;
  if (key == "REG") {
    d.p = 5;
    d.variables = {"x", "y", "z"};
  } else if (key == "TWOPLANES") {
    d.p = 2;
    d.variables = {"x", "y", "z", "w"};
    d.relations = {"x*z", "x*w", "y*z", "y*w"};
  } else if (key == "NILLINE") {
    d.p = 2;
    d.variables = {"x", "y"};
    d.relations = {"x^2"};
  } else if (key == "FERMAT3") {
    d.p = 5;
    d.variables = {"x", "y", "z"};
    d.relations = {"x^3 + y^3 + z^3"};
  } else if (key == "CROSS") {
    d.p = 2;
    d.variables = {"x", "y"};
    d.relations = {"x*y"};
  } else {
    throw InvalidArgument("unknown built-in ring '" + std::string(name) + "'");
  }
  if (p) d.p = *p;
  return d;
}

QuotientRing make_quotient_ring(const RingDescription& desc) {
  if (!is_prime(desc.p) || desc.p > PrimeField::kMaxModulus) {
    throw InvalidArgument("modulus not prime: " + std::to_string(desc.p));
  }
  RingPtr ring = PolyRing::make(desc.p, desc.variables);
  std::vector<Polynomial> rels;
  for (const auto& r : desc.relations) rels.push_back(parse_polynomial(r, ring));
  return QuotientRing(ring, Ideal(ring, std::move(rels)));
}

QuotientRing load_ring(const std::filesystem::path& path) {
  return make_quotient_ring(read_ring_file(path));
}

// ----------------------------------------------------------------- sampler

Sampling sample_parameter_ideals(const QuotientRing& ring, const SurveyConfig& cfg) {
  const int t = ring.dimension();
  if (t <= 0) throw InvalidArgument("sampling needs a ring of positive dimension");
  if (cfg.samples == 0) throw InvalidArgument("sample count must be positive");
  if (cfg.max_degree == 0) throw InvalidArgument("max degree must be positive");
  if (cfg.length && (*cfg.length == 0 || *cfg.length > static_cast<std::size_t>(t))) {
    throw InvalidArgument("subsystem length must lie in [1, " + std::to_string(t) + "]");
  }
  std::mt19937_64 rng(cfg.seed);
  Sampling out;
  const std::size_t budget = cfg.samples * cfg.attempts_per_sample;
  while (out.sequences.size() < cfg.samples) {
    if (out.attempts == budget) {
      throw BudgetExceeded("found only " + std::to_string(out.sequences.size()) +
                           " parameter ideals in " + std::to_string(budget) + " draws");
    }
    ++out.attempts;
    const std::size_t index = out.sequences.size();
    const std::size_t len = cfg.length ? *cfg.length : 1 + index % static_cast<std::size_t>(t);
    std::vector<Polynomial> elems;
    for (std::size_t i = 0; i < len; ++i) {
      elems.push_back(random_form(ring.ambient(), rng, cfg.max_degree));
    }
    bool ok = std::none_of(elems.begin(), elems.end(),
                           [&](const Polynomial& f) { return ring.is_zero(f); });
    if (ok) {
      SequenceSpec seq(ring, std::move(elems));
      ok = len == static_cast<std::size_t>(t) ? is_system_of_parameters(seq)
                                              : is_subsystem_of_parameters(seq);
      if (ok) {
        out.sequences.push_back(std::move(seq));
        continue;
      }
    }
    ++out.rejected;
  }
  return out;
}

// ------------------------------------------------------------------ survey

std::vector<std::string> ideal_strings(const Ideal& ideal) {
  return polynomial_strings(ideal.basis());
}

QRecord q_record(const Ideal& a, const QuotientRing& ring, const ClosureOptions& options) {
  QRecord rec;
  rec.generators = polynomial_strings(a.generators());
  try {
    QExponent q = q_exponent(a, ring, options);
    rec.closure = ideal_strings(q.closure.closure);
    rec.stabilized = q.closure.stabilized;
    rec.certified_lower = q.closure.certified_lower;
    rec.e_star = q.closure.e_star;
    rec.window = q.closure.window;
    rec.status = status_name(q.status);
    if (q.status == QStatus::Found) {
      rec.q_exponent = q.exponent.e;
      rec.q = q.exponent.q;
    }
  } catch (const Error& e) {
    rec.status = "error";
    rec.error = e.what();
  }
  return rec;
}

QReport survey_uniform_q(const QuotientRing& ring, const SurveyConfig& cfg,
                         std::string ring_name) {
  QReport report;
  report.ring = std::move(ring_name);
  report.p = ring.characteristic();
  report.dimension = ring.dimension();
  report.config = cfg;
  Sampling sampling = sample_parameter_ideals(ring, cfg);
  report.attempts = sampling.attempts;
  report.rejected = sampling.rejected;
  const ClosureOptions options{.e_max = cfg.e_max, .lookahead = cfg.lookahead};
  for (const auto& seq : sampling.sequences) {
    Ideal a(ring.ambient(), seq.elements());
    QRecord rec = q_record(a, ring, options);
    if (rec.status == "found") {
      report.max_q_exponent = std::max(report.max_q_exponent.value_or(0), rec.q_exponent);
      ++report.histogram[rec.q_exponent];
    } else if (rec.status == "error") {
      ++report.failures;
    } else {
      ++report.indeterminate;
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

ordered_json QReport::to_json() const {
  ordered_json j;
  j["ring"] = ring;
  j["characteristic"] = p;
  j["dimension"] = dimension;
  j["config"] = config_json(config);
  j["draws"] = attempts;
  j["rejected"] = rejected;
  ordered_json recs = ordered_json::array();
  for (const auto& r : records) {
    ordered_json o;
    o["generators"] = r.generators;
    o["status"] = r.status;
    if (r.status == "error") {
      o["error"] = r.error;
    } else {
      o["closure"] = r.closure;
      o["stabilized"] = r.stabilized;
      o["certified_lower"] = r.certified_lower;
      o["e_star"] = r.e_star;
      o["window"] = r.window;
      if (r.status == "found") {
        o["q_exponent"] = r.q_exponent;
        o["q"] = r.q;
      }
    }
    recs.push_back(std::move(o));
  }
  j["records"] = std::move(recs);
  ordered_json agg;
  if (max_q_exponent) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < *max_q_exponent; ++i) q *= p;
    agg["max_q_exponent"] = *max_q_exponent;
    agg["max_q"] = q;
  } else {
    agg["max_q_exponent"] = nullptr;
    agg["max_q"] = nullptr;
  }
  ordered_json hist = ordered_json::object();
  for (const auto& [e, count] : histogram) hist[std::to_string(e)] = count;
  agg["histogram"] = std::move(hist);
  agg["indeterminate"] = indeterminate;
  agg["failures"] = failures;
  j["aggregate"] = std::move(agg);
  return j;
}

// ------------------------------------------------------------------ suites

std::vector<std::string> suite_names() { return {"gy", "huneke", "br21", "fixedq", "nil"}; }

ordered_json to_json(const SuiteReport& report) {
  ordered_json j;
  j["hypothesis_verified"] = report.hypothesis_verified;
  if (report.hypothesis_witness) {
    const auto& w = *report.hypothesis_witness;
    std::vector<std::size_t> order;
    for (auto i : w.order) order.push_back(i + 1);
    j["hypothesis_witness"] = {{"order", order},
                               {"exponents", w.exponents},
                               {"j", w.violation.first},
                               {"k", w.violation.second}};
  }
  ordered_json ids = ordered_json::array();
  for (const auto& v : report.identities) {
    ordered_json o;
    o["name"] = v.name;
    o["passed"] = v.passed;
    o["checks"] = v.checks;
    if (v.counterexample) o["counterexample"] = v.counterexample->to_string();
    ids.push_back(std::move(o));
  }
  j["identities"] = std::move(ids);
  return j;
}

std::optional<SequenceSpec> find_usd_system(const QuotientRing& ring, const SurveyConfig& cfg) {
  const auto t = static_cast<std::size_t>(ring.dimension());
  if (t == 0) return std::nullopt;
  if (ring.ambient()->nvars() == t) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < t; ++i) vars.push_back(Polynomial::variable(ring.ambient(), i));
    SequenceSpec seq(ring, std::move(vars));
    if (is_system_of_parameters(seq) && is_usd_bounded(seq, cfg.n_max).passes) return seq;
  }
  SurveyConfig full = cfg;
  full.length = t;
  Sampling sampling = sample_parameter_ideals(ring, full);
  for (const auto& seq : sampling.sequences) {
    if (is_usd_bounded(seq, cfg.n_max).passes) return seq;
  }
  return std::nullopt;
}

namespace {

ordered_json sequence_json(const SequenceSpec& x) {
  return {{"elements", polynomial_strings(x.elements())}, {"exponents", x.exponents()}};
}

SuiteResult identity_suite(const SequenceSpec& x, const SurveyConfig& cfg,
                           const std::vector<std::string>& names) {
  SuiteReport full = verify_gy_suite(x, cfg.n_max);
  if (!names.empty()) {
    std::vector<IdentityVerdict> kept;
    for (auto& v : full.identities) {
      if (std::find(names.begin(), names.end(), v.name) != names.end()) kept.push_back(v);
    }
    full.identities = std::move(kept);
  }
  SuiteResult out;
  out.passed = full.all_passed();
  out.report = to_json(full);
  return out;
}

SuiteResult fixedq_suite(const QuotientRing& ring, const SequenceSpec& x,
                         const SurveyConfig& cfg) {
  SuiteResult out;
  const SequenceSpec plain = x.with_exponents({});
  const bool usd = is_usd_bounded(plain, cfg.n_max).passes;
  std::mt19937_64 rng(cfg.seed);
  struct Sample {
    std::size_t r;
    Polynomial h;
    HslExponent hsl;
  };
  std::vector<Sample> samples;
  for (std::size_t r = 0; r < x.length(); ++r) {
    Ideal un = unmixed_part(plain, (IndexSet{1} << r) - 1).ideal;
    std::vector<Polynomial> numerators = un.basis();
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      Polynomial h(ring.ambient());
      for (const auto& g : un.basis()) {
        h += g * Polynomial::constant(ring.ambient(),
                                      static_cast<std::int64_t>(draw(rng, ring.characteristic())));
      }
      numerators.push_back(std::move(h));
    }
    for (auto& h : numerators) {
      GenFracElem elem = make_elem(h, plain, r);
      samples.push_back({r, h, hsl_exponent(elem, cfg.e_max)});
    }
  }
  std::optional<std::uint32_t> e1;
  for (const auto& s : samples) {
    if (s.hsl.status == HslStatus::Found) e1 = std::max(e1.value_or(0), s.hsl.e);
    if (s.hsl.status == HslStatus::Indeterminate) out.indeterminate = true;
  }
  std::size_t found = 0, retest_failures = 0;
  ordered_json records = ordered_json::array();
  for (const auto& s : samples) {
    ordered_json o;
    o["r"] = s.r;
    o["numerator"] = s.h.to_string();
    switch (s.hsl.status) {
      case HslStatus::Found: {
        ++found;
        o["status"] = "found";
        o["e"] = s.hsl.e;
        Tristate again = is_zero_in_cohomology(t_action(make_elem(s.h, plain, s.r), *e1));
        o["retest_at_e1"] = again == Tristate::True;
        if (again != Tristate::True) ++retest_failures;
        if (again == Tristate::Indeterminate) out.indeterminate = true;
        break;
      }
      case HslStatus::NotFound:
        o["status"] = "not-found";
        break;
      case HslStatus::Indeterminate:
        o["status"] = "indeterminate";
        o["e"] = s.hsl.e;
        break;
    }
    records.push_back(std::move(o));
  }
  out.passed = retest_failures == 0 && !out.indeterminate;
  out.report["sequence"] = sequence_json(plain);
  out.report["hypothesis_verified"] = usd;
  out.report["e_max"] = cfg.e_max;
  out.report["samples"] = samples.size();
  out.report["found"] = found;
  if (e1) {
    out.report["e1"] = *e1;
  } else {
    out.report["e1"] = nullptr;
  }
  out.report["retest_failures"] = retest_failures;
  out.report["records"] = std::move(records);
  return out;
}

// Least e with I^[p^e] + J = J, or nullopt within the exponent cap.
std::optional<std::uint32_t> frobenius_nilpotency(const Ideal& n, const QuotientRing& ring) {
  for (std::uint32_t e = 0; e <= kMaxFrobeniusExponent; ++e) {
    if (ideal_equal(frobenius_power(n, e, ring), ring.lift(Ideal::zero(ring.ambient())))) {
      return e;
    }
  }
  return std::nullopt;
}

SuiteResult nil_suite(const QuotientRing& ring, const SurveyConfig& cfg,
                      const std::optional<Ideal>& nilpotent) {
  SuiteResult out;
  Ideal n = [&] {
    if (nilpotent) return *nilpotent;
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring.ambient()->nvars(); ++i) {
      Polynomial v = Polynomial::variable(ring.ambient(), i);
      if (radical_member(v, ring.relations())) gens.push_back(v);
    }
    return Ideal(ring.ambient(), std::move(gens));
  }();
  out.report["nilpotent"] = polynomial_strings(n.generators());
  auto e_prime = frobenius_nilpotency(n, ring);
  if (!e_prime) {
    out.indeterminate = true;
    out.report["error"] = "nilpotent ideal has no Frobenius power inside J within the cap";
    return out;
  }
  out.report["q_prime_exponent"] = *e_prime;
  QuotientRing reduced(ring.ambient(), ring.lift(n));
  const ClosureOptions options{.e_max = cfg.e_max, .lookahead = cfg.lookahead};
  Sampling sampling = sample_parameter_ideals(ring, cfg);
  std::size_t violations = 0;
  ordered_json records = ordered_json::array();
  for (const auto& seq : sampling.sequences) {
    Ideal a(ring.ambient(), seq.elements());
    ordered_json o;
    o["generators"] = polynomial_strings(a.generators());
    QExponent q = q_exponent(a, ring, options);
    QExponent q_reduced = q_exponent(a, reduced, options);
    if (q.status != QStatus::Found || q_reduced.status != QStatus::Found) {
      out.indeterminate = true;
      o["status"] = "indeterminate";
      records.push_back(std::move(o));
      continue;
    }
    const std::uint32_t bound = *e_prime + q_reduced.exponent.e;
    bool ok = q.exponent.e <= bound;
    // The conclusion itself: (a^F)^[Q' Q~] = a^[Q' Q~].
    if (bound <= kMaxFrobeniusExponent) {
      ok = ok && ideal_equal(frobenius_power(q.closure.closure, bound, ring),
                             frobenius_power(a, bound, ring));
    }
    o["q_exponent"] = q.exponent.e;
    o["reduced_q_exponent"] = q_reduced.exponent.e;
    o["bound_exponent"] = bound;
    o["status"] = ok ? "pass" : "fail";
    if (!ok) ++violations;
    records.push_back(std::move(o));
  }
  out.passed = violations == 0 && !out.indeterminate;
  out.report["samples"] = sampling.sequences.size();
  out.report["violations"] = violations;
  out.report["records"] = std::move(records);
  return out;
}

}  // namespace

SuiteResult run_suite(std::string_view name, const QuotientRing& ring,
                      const std::optional<SequenceSpec>& x, const SurveyConfig& cfg,
                      const std::optional<Ideal>& nilpotent) {
  const std::string key(name);
  if (key == "nil") {
    SuiteResult out = nil_suite(ring, cfg, nilpotent);
    ordered_json head;
    head["suite"] = key;
    head.update(out.report);
    out.report = std::move(head);
    out.report["passed"] = out.passed;
    return out;
  }
  std::optional<SequenceSpec> seq = x;
  bool searched = false;
  if (!seq) {
    seq = find_usd_system(ring, cfg);
    searched = true;
    if (!seq) {
      throw InvalidArgument("no system of parameters passing the bounded USD check was found");
    }
  }
  SuiteResult out;
  if (key == "gy") {
    out = identity_suite(*seq, cfg, {});
  } else if (key == "huneke") {
    out = identity_suite(*seq, cfg, {"huneke_prefix", "huneke_unmixed"});
  } else if (key == "br21") {
    out = identity_suite(*seq, cfg, {"limit_product", "limit_unmixed_form"});
  } else if (key == "fixedq") {
    out = fixedq_suite(ring, *seq, cfg);
  } else {
    throw InvalidArgument("unknown suite '" + key + "'");
  }
  ordered_json head;
  head["suite"] = key;
  head["sequence"] = sequence_json(*seq);
  head["sequence_searched"] = searched;
  head["n_max"] = cfg.n_max;
  head.update(out.report);
  out.report = std::move(head);
  out.report["passed"] = out.passed;
  return out;
}

}  // namespace frobq
