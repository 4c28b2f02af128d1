#include "lex/cli.hpp"

#include "lex/aspec.hpp"
#include "lex/aws.hpp"
#include "lex/codes.hpp"
#include "lex/measures.hpp"
#include "lex/subshift.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

namespace lex {

namespace {

struct Opts {
  std::string model = "aws";
  int N = 2;
  std::size_t ell = 2;
  std::size_t a = 2;
  std::size_t n = 3;
  std::size_t n_max = 12;
  std::size_t k = 1;
  std::string C = "1";
  std::string method;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::size_t cutoff = 256;
  std::vector<std::string> words;
  std::vector<std::uint64_t> gaps;
  std::string family = "T";
  std::size_t trials = 1000;
  std::uint64_t length = 100000;
  bool interior_only = false;
};

// Per-command defaults for flags the user left out.
struct Given {
  const CLI::App* app;
  bool operator()(const std::string& flag) const { return app->count(flag) > 0; }
};

std::string str(const BigInt& x) { return to_decimal(x); }
std::string str(const Rational& x) { return to_fraction_string(x); }
template <class T> std::string str(const T& x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

std::string csv_words(const std::vector<Word>& words) {
  std::string out = "word\n";
  for (const auto& w : words) out += format_word(w) + "\n";
  return out;
}

SubshiftPtr make_base(const Opts& o) {
  if (o.model == "full") return full_shift(Alphabet::range(0, static_cast<Letter>(o.a) - 1));
  if (o.model == "aws") return aws_model(o.N);
  if (o.model == "aspec") return aspec_model(o.N, o.ell);
  throw std::invalid_argument("unknown model " + o.model);
}

SubshiftPtr make_model(const Opts& o) {
  auto base = make_base(o);
  if (o.k == 0) throw std::invalid_argument("k must be at least 1");
  return o.k == 1 ? base : higher_power(base, o.k);
}

void model_params(Report& r, const Opts& o) {
  r.param("model", o.model);
  if (o.model == "full") r.param("a", str(o.a));
  else r.param("N", str(o.N));
  if (o.model == "aspec") r.param("ell", str(o.ell));
  if (o.k != 1) r.param("k", str(o.k));
}

Alphabet code_alphabet(std::size_t a) {
  if (a < 1 || a > 1000) throw std::invalid_argument("alphabet size must be in [1, 1000]");
  return Alphabet::range(0, static_cast<Letter>(a) - 1);
}

Code build_family(CodeFamily f, const Alphabet& alphabet, std::size_t n) {
  switch (f) {
  case CodeFamily::T: return build_T(alphabet, n);
  case CodeFamily::U: return build_U(alphabet, n);
  case CodeFamily::V: return build_V(alphabet, n);
  case CodeFamily::S: break;
  }
  throw std::invalid_argument("family S is built with `codes separate`");
}

std::optional<Rational> cardinality_bound(const Code& c) {
  const auto a = c.alphabet().size();
  switch (c.family()) {
  case CodeFamily::T: return t_cardinality_bound(a, c.length());
  case CodeFamily::U: return u_cardinality_bound(a, c.length());
  case CodeFamily::V: return Rational(ipow(BigInt(a), static_cast<unsigned>(c.length() - 2)));
  case CodeFamily::S: break;
  }
  return std::nullopt;
}

// ---- commands -------------------------------------------------------------

void cmd_enumerate(Report& r, const Opts& o) {
  auto model = make_model(o);
  model_params(r, o);
  r.param("n", str(o.n));
  auto words = enumerate_language(*model, o.n);
  r.param("count", str(words.size()));
  if (auto rec = model->count_by_recurrence(o.n))
    r.check("enumeration matches recurrence count", BigInt(words.size()) == *rec,
            "brute " + str(words.size()) + ", dp " + str(*rec));
  r.check("sorted and duplicate-free",
          std::adjacent_find(words.begin(), words.end(), std::greater_equal<>()) == words.end());
  r.table("words", csv_words(words));
}

void cmd_count(Report& r, const Opts& o) {
  auto model = make_model(o);
  model_params(r, o);
  r.param("n", str(o.n));
  const std::string method = o.method.empty() ? "all" : o.method;
  r.param("method", method);

  std::vector<CountMethod> methods;
  if (method == "all") {
    methods = {CountMethod::brute, CountMethod::dp};
    if (o.model == "aspec" && o.k == 1) methods.push_back(CountMethod::formula);
  } else {
    methods = {parse_count_method(method)};
  }

  std::string table = "n,count,method\n";
  std::vector<BigInt> values;
  for (auto m : methods) {
    BigInt c;
    if (m == CountMethod::formula) {
      auto aspec = std::dynamic_pointer_cast<const AspecShift>(model);
      if (!aspec) throw std::invalid_argument("method formula is only available for --model aspec");
      c = count_formula(*aspec, o.n);
    } else {
      c = count_language(*model, o.n, m);
    }
    r.param("count_" + to_string(m), str(c));
    table += str(o.n) + "," + str(c) + "," + to_string(m) + "\n";
    values.push_back(c);
  }
  if (values.size() > 1) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) joined += (i ? "/" : "") + str(values[i]);
    r.check("methods agree",
            std::all_of(values.begin(), values.end(), [&](const BigInt& v) { return v == values[0]; }),
            joined);
  }
  r.table("counts", table);
}

void cmd_entropy(Report& r, const Opts& o) {
  auto model = make_model(o);
  model_params(r, o);
  r.param("n_max", str(o.n_max));
  const auto method = parse_count_method(o.method.empty() ? "dp" : o.method);
  r.param("method", to_string(method));
  if (o.n_max < 1) throw std::invalid_argument("n-max must be at least 1");
  auto rows = entropy_table(*model, o.n_max, method);
  r.param("upper_bound", str(rows.back().upper_bound));
  r.check("log rate nonincreasing", log_rate_nonincreasing(rows));

  bool sub = true;
  std::string first_bad;
  for (std::size_t m = 1; m <= o.n_max && sub; ++m)
    for (std::size_t n = 1; m + n <= o.n_max && sub; ++n)
      if (rows[m + n - 1].count > rows[m - 1].count * rows[n - 1].count) {
        sub = false;
        first_bad = "m=" + str(m) + " n=" + str(n);
      }
  r.check("counts are submultiplicative", sub, first_bad);
  r.table("entropy", entropy_csv(rows));
}

std::uint64_t exact_gap(std::uint64_t n) {
  std::uint64_t m = 1;
  while (!aws_gap_allows(n, m)) ++m;
  return m;
}

void cmd_glue_aws(Report& r, const Opts& o, std::uint64_t seed) {
  r.param("N", str(o.N));
  auto model = aws_model(o.N);

  if (!o.words.empty()) {
    std::vector<Word> words;
    for (const auto& s : o.words) words.push_back(parse_word(s));
    std::vector<std::uint64_t> gaps = o.gaps;
    if (gaps.empty())
      for (std::size_t i = 0; i + 1 < words.size(); ++i) gaps.push_back(gap_f(words[i].size()));
    auto g = glue(o.N, words, gaps);
    r.param("glued", format_word_spaced(g));
    r.check("glued word is a member", aws_is_member(o.N, g));
    return;
  }

  r.seed = seed;
  r.param("trials", str(o.trials));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> count(2, 5), len(1, 12), extra(0, 2);
  std::size_t good = 0, longest = 0;
  std::string samples = "glued\n";
  for (std::size_t t = 0; t < o.trials; ++t) {
    std::vector<Word> words(count(rng));
    std::vector<std::uint64_t> gaps;
    for (auto& w : words) w = random_member(*model, len(rng), rng);
    for (std::size_t i = 0; i + 1 < words.size(); ++i) gaps.push_back(gap_f(words[i].size()) + extra(rng));
    auto g = glue(o.N, words, gaps);
    good += aws_is_member(o.N, g) && !aws_has_forbidden_subword(g.letters());
    longest = std::max(longest, g.size());
    if (t < 5) samples += format_word_spaced(g) + "\n";
  }
  r.param("longest_glued", str(longest));
  r.check("all glued words are members", good == o.trials, str(good) + "/" + str(o.trials));

  std::string gap_table = "n,gap_f,exact\n";
  bool table_ok = true;
  for (std::uint64_t n : {1, 2, 3, 4, 9, 10, 27, 28}) {
    const auto f = gap_f(n), e = exact_gap(n);
    table_ok = table_ok && f == e;
    gap_table += str(n) + "," + str(f) + "," + str(e) + "\n";
  }
  r.check("gap table matches the exact rule", table_ok);
  auto gf = check_gap_function({[](std::uint64_t n) { return gap_f(n); }, "2+ceil(log3 n)"}, 1000000);
  r.check("gap function positive and nondecreasing", gf.passed(),
          "sublinear from n=" + str(gf.sublinear_from) + ", f(n)/n at 10^6 = " + str(gf.tail_ratio));
  r.table("gap_table", gap_table);
  r.table("samples", samples);
}

void cmd_hp_inequality(Report& r, const Rational& C, std::uint64_t n_max) {
  auto rep = hp_gap_inequality_check(C, n_max);
  r.param("C", str(C));
  r.param("k", str(rep.k));
  r.param("n_max", str(n_max));
  r.param("violations", str(rep.sweep.violations));
  r.param("max_lhs", str(rep.sweep.max_lhs));
  r.param("max_rhs", str(rep.sweep.max_rhs));
  r.check("induced gap <= max(1, ceil(C log3 n)) for C=" + str(C), rep.passed(),
          rep.sweep.first_violation ? "first violation at n=" + str(*rep.sweep.first_violation)
                                    : str(rep.sweep.checked) + " values checked");
}

void cmd_repair_aspec(Report& r, const Opts& o, std::uint64_t seed) {
  auto model = aspec_model(o.N, o.ell);
  r.param("N", str(o.N));
  r.param("ell", str(o.ell));
  r.param("edge_runs", o.interior_only ? "kept" : "repaired");
  const bool edges = !o.interior_only;

  if (!o.words.empty()) {
    std::vector<Word> words;
    for (const auto& s : o.words) words.push_back(parse_word(s));
    auto res = repair_concatenation(*model, words, edges);
    r.param("glued", format_word_spaced(res.glued));
    r.check("glued word is a member", aspec_is_member(*model, res.glued));
    r.check("per-word distance <= 4",
            std::all_of(res.distances.begin(), res.distances.end(), [](auto d) { return d <= 4; }));
    r.table("transcript", repair_transcript_json(words, res));
    return;
  }

  r.seed = seed;
  r.param("trials", str(o.trials));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> count(1, 5), len(1, 20);
  std::size_t members = 0, within = 0, worst = 0;
  std::vector<std::size_t> histogram(5, 0);
  for (std::size_t t = 0; t < o.trials; ++t) {
    std::vector<Word> words(count(rng));
    for (auto& w : words) w = random_member(*model, len(rng), rng);
    auto res = repair_concatenation(*model, words, edges);
    members += aspec_is_member(*model, res.glued);
    const auto m = *std::max_element(res.distances.begin(), res.distances.end());
    within += m <= 4;
    worst = std::max(worst, m);
    for (auto d : res.distances) ++histogram[std::min<std::size_t>(d, 4)];
  }
  r.param("max_distance", str(worst));
  r.check("glued words are members", members == o.trials, str(members) + "/" + str(o.trials));
  r.check("per-word distance <= 4", within == o.trials, "largest " + str(worst));
  std::string h = "distance,words\n";
  for (std::size_t d = 0; d < histogram.size(); ++d) h += str(d) + "," + str(histogram[d]) + "\n";
  r.table("distance_histogram", h);
}

void cmd_alpha(Report& r, int N, std::size_t ell, std::size_t cutoff) {
  auto model = aspec_model(N, ell);
  auto a = alpha_interval(*model, cutoff);
  const auto closed = alpha_closed_bound(N, ell);
  r.param("N", str(N));
  r.param("ell", str(ell));
  r.param("cutoff", str(cutoff));
  r.param("lower", str(to_double(a.lower)));
  r.param("upper", str(to_double(a.upper)));
  r.param("closed_bound", str(closed));
  r.param("below_one", a.upper < 1 ? "true" : "false");
  r.check("interval upper end <= closed-form bound", a.upper <= closed,
          str(to_double(a.upper)) + " vs " + str(to_double(closed)));
  r.table("families", family_table_csv(*model, std::min<std::size_t>(cutoff, 64)));
}

void cmd_entropy_bound(Report& r, int N, std::size_t ell, std::size_t n_max, std::size_t cutoff) {
  auto model = aspec_model(N, ell);
  auto rep = entropy_bound_check(*model, n_max, cutoff);
  r.param("N", str(N));
  r.param("ell", str(ell));
  r.param("n_max", str(n_max));
  r.param("alpha_upper", str(to_double(rep.alpha.upper)));
  r.param("applicable", rep.applicable ? "true" : "false");
  if (!rep.applicable) {
    r.param("note", rep.note);
    return;
  }
  std::size_t holds = 0;
  bool rates = true;
  std::string t = "n,count,log_rate,rate_bound,margin\n";
  for (const auto& row : rep.rows) {
    holds += row.holds;
    rates = rates && row.log_rate <= row.rate_bound;
    t += str(row.n) + "," + str(row.count) + "," + str(row.log_rate) + "," + str(row.rate_bound) +
         "," + str(to_double(row.bound - Rational(row.count)) / to_double(row.bound)) + "\n";
  }
  r.check("count <= (2n/(1-alpha)) N^n", holds == rep.rows.size(),
          str(holds) + "/" + str(rep.rows.size()));
  r.check("log rate <= ln N + ln(2n/(1-alpha))/n", rates);
  r.table("entropy_bound", t);
}

void cmd_codes_build(Report& r, const Opts& o, bool verify) {
  const auto fam = parse_code_family(o.family);
  auto alphabet = code_alphabet(o.a);
  auto code = build_family(fam, alphabet, o.n);
  r.param("family", to_string(fam));
  r.param("a", str(o.a));
  r.param("n", str(o.n));
  r.param("params", code.params_string());
  r.param("cardinality", str(code.cardinality()));
  auto bound = cardinality_bound(code);
  r.param("bound", str(*bound));
  r.check(fam == CodeFamily::V ? "cardinality = a^(n-2)" : "cardinality within bound",
          fam == CodeFamily::V ? Rational(code.cardinality()) == *bound
                               : Rational(code.cardinality()) <= *bound);
  if (verify) {
    const auto radius = code.spanning_radius();
    r.check(str(radius) + "-spanning (exhaustive)", verify_spanning(code, radius));
  } else if (code.cardinality() <= 100000) {
    r.table("code", export_code(code));
  }
}

void cmd_codes_separate(Report& r, const Opts& o, std::optional<std::uint64_t> seed) {
  auto alphabet = code_alphabet(o.a);
  auto cube = all_words(alphabet, o.n);
  std::vector<Word> W;
  if (seed) {
    r.seed = *seed;
    std::mt19937_64 rng(*seed);
    std::bernoulli_distribution keep(0.5);
    for (const auto& w : cube)
      if (keep(rng)) W.push_back(w);
    if (W.empty()) W.push_back(cube.front());
  } else {
    W = std::move(cube);
  }
  auto s = extract_3_separated(W, alphabet, o.n);
  const Rational bound(BigInt(W.size()), BigInt(4 * o.n * o.a * o.a));
  r.param("a", str(o.a));
  r.param("n", str(o.n));
  r.param("source_size", str(W.size()));
  r.param("params", s.params_string());
  r.param("cardinality", str(s.cardinality()));
  auto members = s.members();
  auto d = min_pairwise_distance(members);
  r.check("pairwise distance >= 3", verify_separated(members, 3),
          d ? "minimum " + str(*d) : "fewer than two words");
  r.check("|S| >= |W|/(4 n a^2)", Rational(s.cardinality()) >= bound, "bound " + str(bound));
  r.table("code", export_code(s));
}

void cmd_repair_example(Report& r) {
  const auto A = Alphabet::range(0, 2);
  const ParityVector v{0, 1, 0};
  const auto in = parse_word("0121200111"), out = parse_word("0211221100");
  const auto fixed = repair_T(A, 10, v, out);
  r.param("a", "3");
  r.param("n", "10");
  r.param("v", format_parity(v));
  r.param("repaired", format_word(fixed));
  r.check("0121200111 in T", t_membership(A, 10, v, in.letters()));
  r.check("0211221100 not in T", !t_membership(A, 10, v, out.letters()));
  r.check("repair gives 0211211100", fixed == parse_word("0211211100"), format_word(fixed));
}

void cmd_measures(Report& r, const Opts& o, std::uint64_t seed, std::uint64_t L) {
  if (o.a < 1 || o.a > 1000) throw std::invalid_argument("alphabet size must be in [1, 1000]");
  const auto pos = Alphabet::range(1, static_cast<Letter>(o.a));
  const auto neg = Alphabet::range(-static_cast<Letter>(o.a), -1);
  r.seed = seed;
  r.param("a", str(o.a));
  r.param("n", str(o.n));
  r.param("sample_length", str(L));

  auto mu = CylinderDistribution::uniform_bernoulli(pos, o.n);
  auto nu = CylinderDistribution::uniform_bernoulli(neg, o.n);
  const auto hist = mu.weight_histogram();
  const bool exact_mass = hist.size() == 1 && Rational(hist.begin()->second) * hist.begin()->first == 1;
  const double h = level_entropy(mu), ln_a = std::log(static_cast<double>(o.a));
  r.param("entropy", str(h));
  r.check("level entropy = ln a", exact_mass && std::abs(h - ln_a) <= 1e-12 * std::max(1.0, ln_a),
          "|h - ln a| = " + str(std::abs(h - ln_a)));
  auto sc = support_count_check(mu);
  r.check("support count inequality (equality case)",
          sc.holds && std::abs(sc.log_support - sc.entropy_times_level) <= 1e-9 * std::max(1.0, sc.log_support),
          "ln|supp| = " + str(sc.log_support) + ", n h = " + str(sc.entropy_times_level));
  r.check("positive and negative supports disjoint", disjoint_support_check(mu, nu));
  if (o.n >= 2) {
    const Word ones(std::vector<Letter>(o.n - 1, 1));
    r.check("marginal consistency", mu.marginal().weight(ones) == bernoulli_weight(pos, ones));
  }

  auto sample = sample_and_frequencies(pos, L, o.n, seed);
  Rational sum = 0;
  double worst = 0;
  const double expected = std::pow(static_cast<double>(o.a), -static_cast<double>(o.n));
  for (const auto& [w, p] : sample.table()) {
    sum += p;
    worst = std::max(worst, std::abs(to_double(p) - expected));
  }
  r.param("sample_max_deviation", str(worst));
  r.check("sample frequencies sum to 1", sum == 1);
  r.check("sample satisfies support count inequality", support_count_check(sample).holds);
  if (sample.support_size() <= 1000) r.table("sample", distribution_csv(sample));
}

// ---- verify all -------------------------------------------------------------

void merge(Report& into, const std::string& prefix, const Report& part) {
  for (const auto& c : part.checks) into.check(prefix + ": " + c.name, c.pass, c.details);
}

void cmd_verify_all(Report& r, std::uint64_t seed) {
  r.seed = seed;
  auto run = [&](const std::string& prefix, auto&& body) {
    Report part;
    try {
      body(part);
    } catch (const std::exception& e) {
      part.check("completed", false, e.what());
    }
    merge(r, prefix, part);
  };

  run("codes repair-example", [](Report& p) { cmd_repair_example(p); });
  run("codes T", [](Report& p) {
    bool ok = true;
    for (std::size_t a : {2, 3})
      for (std::size_t n = 1; n <= 8; ++n) {
        auto t = build_T(code_alphabet(a), n);
        BigInt sum = 0;
        for (const auto& c : count_t_classes(code_alphabet(a), n)) sum += c;
        ok = ok && Rational(t.cardinality()) <= t_cardinality_bound(a, n) && verify_spanning(t, 1) &&
             sum == ipow(BigInt(a), static_cast<unsigned>(n));
      }
    p.check("1-spanning, bound and partition for a in {2,3}, n <= 8", ok);
  });
  run("codes U/V", [](Report& p) {
    bool ok = true;
    for (std::size_t n = 2; n <= 8; ++n) {
      auto u = build_U(code_alphabet(2), n);
      auto v = build_V(code_alphabet(2), n);
      ok = ok && verify_spanning(u, 2) && verify_spanning(v, 2) &&
           Rational(u.cardinality()) <= u_cardinality_bound(2, n) &&
           v.cardinality() == ipow(BigInt(2), static_cast<unsigned>(n - 2));
    }
    p.check("2-spanning and sizes for a = 2, n <= 8", ok);
  });
  run("codes separate", [&](Report& p) {
    Opts o;
    o.a = 2;
    o.n = 6;
    cmd_codes_separate(p, o, std::nullopt);
    o.a = 3;
    o.n = 4;
    cmd_codes_separate(p, o, seed);
  });
  run("aws counts", [](Report& p) {
    bool ok = true;
    for (int N : {1, 2})
      for (std::size_t n = 1; n <= 8; ++n)
        ok = ok && count_language(*aws_model(N), n, CountMethod::brute) == aws_count_dp(N, n);
    p.check("brute = dp for N <= 2, n <= 8", ok);
  });
  run("glue-aws", [&](Report& p) {
    Opts o;
    o.trials = 100;
    cmd_glue_aws(p, o, seed);
  });
  run("hp-inequality", [](Report& p) {
    for (const char* c : {"1/4", "1/2", "1", "2"}) cmd_hp_inequality(p, parse_rational(c), 100000);
  });
  run("aspec counts", [](Report& p) {
    Opts o;
    o.model = "aspec";
    o.n = 3;
    cmd_count(p, o);
    bool ok = true;
    for (std::size_t ell : {2, 3}) {
      auto m = aspec_model(2, ell);
      auto f = count_formula_table(*m, 8);
      auto d = aspec_count_dp_table(*m, 8);
      for (std::size_t n = 1; n <= 8; ++n)
        ok = ok && f[n] == d[n] && f[n] == count_language(*m, n, CountMethod::brute);
    }
    p.check("brute = dp = formula for N = 2, ell in {2,3}, n <= 8", ok);
  });
  run("repair-aspec", [&](Report& p) {
    Opts o;
    o.ell = 3;
    o.trials = 100;
    cmd_repair_aspec(p, o, seed);
  });
  run("alpha", [](Report& p) {
    auto a = alpha_interval(*aspec_model(10, 32), 256);
    p.check("alpha upper <= 0.91 for N = 10, ell = 32", a.upper <= Rational(91, 100),
            str(to_double(a.upper)));
  });
  run("entropy-bound", [](Report& p) { cmd_entropy_bound(p, 10, 32, 50, 256); });
  run("measures", [&](Report& p) {
    for (std::size_t a : {2, 10, 20}) {
      Opts o;
      o.a = a;
      o.n = 4;
      cmd_measures(p, o, seed, 20000);
    }
  });
}

// ---- driver -----------------------------------------------------------------

void add_model_flags(CLI::App* sub, Opts& o) {
  sub->add_option("--model", o.model, "full, aws or aspec")->check(CLI::IsMember({"full", "aws", "aspec"}));
  sub->add_option("--N", o.N, "letters are -N..N (aws) or +-1..+-N (aspec)");
  sub->add_option("--ell", o.ell, "aspec: longest run length using V codes");
  sub->add_option("--a", o.a, "full shift alphabet size");
  sub->add_option("--k", o.k, "higher power");
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  Opts o;
  CLI::App app{"Exact language counts, codes and checks for two specification counterexamples", "lex"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "list L_n");
  add_model_flags(enumerate, o);
  enumerate->add_option("--n", o.n, "word length");

  auto* count = app.add_subcommand("count", "|L_n| by brute force, recurrence or formula");
  add_model_flags(count, o);
  count->add_option("--n", o.n, "word length");
  count->add_option("--method", o.method, "brute, dp, formula or all")
      ->check(CLI::IsMember({"brute", "dp", "formula", "all"}));

  auto* entropy = app.add_subcommand("entropy", "(1/n) ln |L_n| for n <= n-max");
  add_model_flags(entropy, o);
  entropy->add_option("--n-max", o.n_max, "largest n");
  entropy->add_option("--method", o.method, "brute or dp")->check(CLI::IsMember({"brute", "dp"}));

  auto* glue_cmd = app.add_subcommand("glue-aws", "glue words of the gap-function shift");
  glue_cmd->add_option("--N", o.N, "letters are -N..N");
  glue_cmd->add_option("--word", o.words, "word to glue (repeat); random tuples when absent");
  glue_cmd->add_option("--gap", o.gaps, "zeros after each word but the last (default gap_f)");
  glue_cmd->add_option("--seed", o.seed, "seed for random tuples");
  glue_cmd->add_option("--trials", o.trials, "random tuples");

  auto* hp = app.add_subcommand("hp-inequality", "gap bound of the k-th higher power, k = ceil(8/C)");
  hp->add_option("--C", o.C, "positive rational p/q");
  hp->add_option("--n-max", o.n_max, "sweep 1..n-max (default 10^6)");

  auto* repair = app.add_subcommand("repair-aspec", "concatenate and repair words of the run-family shift");
  repair->add_option("--N", o.N, "letters are +-1..+-N");
  repair->add_option("--ell", o.ell, "longest run length using V codes");
  repair->add_option("--word", o.words, "member word (repeat); random tuples when absent");
  repair->add_option("--seed", o.seed, "seed for random tuples");
  repair->add_option("--trials", o.trials, "random tuples");
  repair->add_flag("--interior-only", o.interior_only, "leave the first and last runs alone");

  auto* alpha = app.add_subcommand("alpha", "exact interval for sum M_t N^-t");
  alpha->add_option("--N", o.N, "default 10");
  alpha->add_option("--ell", o.ell, "default 32");
  alpha->add_option("--cutoff", o.cutoff, "terms summed exactly");

  auto* ebound = app.add_subcommand("entropy-bound", "|L_n| <= (2n/(1-alpha)) N^n");
  ebound->add_option("--N", o.N, "default 10");
  ebound->add_option("--ell", o.ell, "default 32");
  ebound->add_option("--n-max", o.n_max, "default 200");
  ebound->add_option("--cutoff", o.cutoff, "alpha cutoff");

  auto* codes = app.add_subcommand("codes", "covering and separated codes");
  codes->require_subcommand(1);
  auto* build = codes->add_subcommand("build", "construct T, U or V");
  auto* verify_code = codes->add_subcommand("verify", "construct and check spanning exhaustively");
  for (auto* c : {build, verify_code}) {
    c->add_option("--family", o.family, "T, U or V")->check(CLI::IsMember({"T", "U", "V"}));
    c->add_option("--a", o.a, "alphabet {0..a-1}");
    c->add_option("--n", o.n, "word length");
  }
  auto* separate = codes->add_subcommand("separate", "3-separated class of A^n or a seeded subset");
  separate->add_option("--a", o.a, "alphabet {0..a-1}");
  separate->add_option("--n", o.n, "word length");
  separate->add_option("--seed", o.seed, "random subset of A^n");
  auto* example = codes->add_subcommand("repair-example", "the 0211221100 example");

  auto* measures = app.add_subcommand("measures", "Bernoulli cylinder distributions");
  measures->add_option("--a", o.a, "letters 1..a");
  measures->add_option("--n", o.n, "level");
  measures->add_option("--seed", o.seed, "sampling seed");
  measures->add_option("--length", o.length, "sampled word length");

  auto* verify = app.add_subcommand("verify", "run the desk-scale suite");
  std::string target;
  verify->add_option("target", target, "all")->required()->check(CLI::IsMember({"all"}));
  verify->add_option("--seed", o.seed, "seed for the randomized checks");

  for (auto* sub : {enumerate, count, entropy, glue_cmd, hp, repair, alpha, ebound, build, verify_code,
                    separate, example, measures, verify}) {
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    if (code != 0) {
      res.err += app.help();
      res.exit_code = 2;
    }
    return res;
  }

  Report& r = res.report;
  try {
    if (*enumerate) {
      r.command = "enumerate";
      cmd_enumerate(r, o);
    } else if (*count) {
      r.command = "count";
      cmd_count(r, o);
    } else if (*entropy) {
      r.command = "entropy";
      cmd_entropy(r, o);
    } else if (*glue_cmd) {
      r.command = "glue-aws";
      cmd_glue_aws(r, o, o.seed);
    } else if (*hp) {
      r.command = "hp-inequality";
      cmd_hp_inequality(r, parse_rational(o.C), Given{hp}("--n-max") ? o.n_max : 1000000);
    } else if (*repair) {
      r.command = "repair-aspec";
      cmd_repair_aspec(r, o, o.seed);
    } else if (*alpha) {
      Given g{alpha};
      r.command = "alpha";
      cmd_alpha(r, g("--N") ? o.N : 10, g("--ell") ? o.ell : 32, o.cutoff);
    } else if (*ebound) {
      Given g{ebound};
      r.command = "entropy-bound";
      cmd_entropy_bound(r, g("--N") ? o.N : 10, g("--ell") ? o.ell : 32, g("--n-max") ? o.n_max : 200,
                        o.cutoff);
    } else if (*build) {
      r.command = "codes build";
      cmd_codes_build(r, o, false);
    } else if (*verify_code) {
      r.command = "codes verify";
      cmd_codes_build(r, o, true);
    } else if (*separate) {
      r.command = "codes separate";
      cmd_codes_separate(r, o, Given{separate}("--seed") ? std::optional<std::uint64_t>(o.seed) : std::nullopt);
    } else if (*example) {
      r.command = "codes repair-example";
      cmd_repair_example(r);
    } else if (*measures) {
      r.command = "measures";
      cmd_measures(r, o, o.seed, o.length);
    } else if (*verify) {
      r.command = "verify all";
      cmd_verify_all(r, o.seed);
    }
  } catch (const std::invalid_argument& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
    return res;
  } catch (const BudgetExceeded& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
    return res;
  } catch (const std::exception& e) {
    // A violated post-condition inside a library routine.
    r.check("completed", false, e.what());
  }

  const std::string doc = o.format == "csv" ? r.to_csv() : r.to_json();
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      res.err = "error: cannot write " + o.out + "\n";
      res.exit_code = 2;
      return res;
    }
    f << doc;
  } else {
    res.out = doc;
  }
  res.exit_code = r.passed() ? 0 : 1;
  return res;
}

} // namespace lex
