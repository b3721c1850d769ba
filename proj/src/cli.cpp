#include "tensorlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "tensorlab/tensorlab.hpp"

namespace tensorlab::cli {
namespace {

struct Options {
  std::string field;
  std::uint64_t budget = kDefaultBudget;
  std::size_t workers = 1;
  std::optional<std::uint64_t> seed;

  std::string in;
  std::string with;
  std::vector<std::size_t> d;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> gamma;
  std::vector<std::string> coeffs;
  std::optional<std::size_t> r;
  std::optional<std::size_t> max_rank;
  std::optional<std::size_t> unique;
  std::size_t n = 0;
  std::string n_range = "2..2";
  std::string m_range = "1..1";
  std::size_t mode_dim = 2;
  bool relabel = false;
  std::string target;
};

struct Outcome {
  Json doc;
  int code = kExitClean;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const char* flag) {
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(Errc::InvalidArgument, std::string("expected N or A..B for ") + flag, flag);
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  const auto lo = number(std::string_view(text).substr(0, dots));
  const auto hi = number(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw Error(Errc::InvalidArgument, std::string("empty range for ") + flag, flag);
  return {lo, hi};
}

IndexSet to_zero_based(const std::vector<std::size_t>& one_based, std::size_t n, const char* flag) {
  IndexSet out;
  for (auto a : one_based) {
    if (a < 1 || a > n)
      throw Error(Errc::IndexOutOfRange, "index " + std::to_string(a) + " outside [1, " + std::to_string(n) + "]", flag);
    out.push_back(a - 1);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(Errc::InvalidArgument, "repeated index", flag);
  return out;
}

/// Field of an input document, checked against an explicit --field.
FieldSpec input_field(const Options& o, const Json& doc) {
  const auto f = field_from_json(doc);
  if (!o.field.empty() && FieldSpec::parse(o.field) != f)
    throw Error(Errc::InvalidArgument, "--field " + o.field + " disagrees with the input file", "/field");
  return f;
}

FieldSpec flag_field(const Options& o, const FieldSpec& fallback) {
  return o.field.empty() ? fallback : FieldSpec::parse(o.field);
}

template <ExactScalar S>
std::pair<DenseTensor<S>, DenseTensor<S>> two_tensors(const Json& doc) {
  if (doc.contains("tensors")) {
    const ModeSignature sig(dims_from_json(doc));
    const auto& ts = doc["tensors"];
    if (!ts.is_array() || ts.size() != 2) throw Error(Errc::SchemaError, "expected exactly two tensors", "/tensors");
    return {DenseTensor<S>(sig, vector_from_json<S>(ts[0], sig.size(), "/tensors/0")),
            DenseTensor<S>(sig, vector_from_json<S>(ts[1], sig.size(), "/tensors/1"))};
  }
  const auto s = vector_set_from_json<S>(doc);
  if (s.size() != 2) throw Error(Errc::SchemaError, "expected exactly two vectors", "/vectors");
  return {expand_product(s[0]), expand_product(s[1])};
}

Outcome check_gp(const Options& o) {
  const Json doc = read_json_file(o.in);
  return visit_field(input_field(o, doc), [&]<class S>(std::type_identity<S>) {
    const auto s = vector_set_from_json<S>(doc);
    return Outcome{general_position_to_json(check_general_position(s, o.d))};
  });
}

Outcome kruskal_cert(const Options& o) {
  const Json doc = read_json_file(o.in);
  return visit_field(input_field(o, doc), [&]<class S>(std::type_identity<S>) {
    const auto s = vector_set_from_json<S>(doc);
    Json out = certificate_to_json(certify_uniqueness(s));
    if (o.r) {
      const auto gamma = to_zero_based(o.gamma, s.size(), "--gamma");
      out["gamma"] = index_set_to_json(gamma);
      out["gamma_rank"] = gamma_prediction_to_json(classify_gamma_rank(s, gamma, *o.r));
    }
    return Outcome{std::move(out)};
  });
}

Outcome rank(const Options& o) {
  const Json doc = read_json_file(o.in);
  return visit_field(input_field(o, doc), [&]<class S>(std::type_identity<S>) {
    const auto t = tensor_or_sum_from_json<S>(doc);
    if (o.unique) return Outcome{uniqueness_to_json(unique_decomposition_check(t, *o.unique, o.budget))};
    return Outcome{rank_result_to_json(tensor_rank(t, o.max_rank, o.budget))};
  });
}

Outcome zero_subsets(const Options& o) {
  const Json doc = read_json_file(o.in);
  return visit_field(input_field(o, doc), [&]<class S>(std::type_identity<S>) {
    const auto s = vector_set_from_json<S>(doc);
    Json out;
    Json subsets = Json::array();
    for (const auto& z : zero_sum_subsets(s)) subsets.push_back(index_set_to_json(z));
    out["zero_subsets"] = std::move(subsets);
    const bool total_zero = sum_set(s).is_zero();
    out["total_is_zero"] = total_zero;
    if (total_zero) out["irreducible"] = is_irreducible(s);
    return Outcome{std::move(out)};
  });
}

Outcome partition(const Options& o) {
  const Json doc = read_json_file(o.in);
  return visit_field(input_field(o, doc), [&]<class S>(std::type_identity<S>) {
    Json out;
    out["blocks"] = partition_to_json(minimal_zero_partition(vector_set_from_json<S>(doc)));
    return Outcome{std::move(out)};
  });
}

Outcome chain(const Options& o) {
  ChainProblem cp;
  if (!o.in.empty()) {
    cp = chain_problem_from_json(read_json_file(o.in));
  } else if (o.seed) {
    if (o.n == 0) throw Error(Errc::InvalidArgument, "--seed needs --n", "--n");
    cp = random_valid_chain_problem(o.n, *o.seed);
  } else {
    throw Error(Errc::InvalidArgument, "chain needs --in or --seed", "--in");
  }
  Json out;
  out["problem"] = chain_problem_to_json(cp);
  validate_chain_problem(cp);
  if (auto violation = check_lemma_conditions(cp)) {
    out["conditions_hold"] = false;
    out["violation"] = lemma_violation_to_json(*violation);
    return Outcome{std::move(out)};
  }
  const auto c = build_chain(cp);
  out["conditions_hold"] = true;
  out["chain"] = chain_to_json(c);
  const bool ok = chain_invariants_hold(cp, c);
  out["invariants_hold"] = ok;
  return Outcome{std::move(out), ok ? kExitClean : kExitCounterexample};
}

Outcome classify_subspace(const Options& o) {
  const Json doc = read_json_file(o.in);
  return visit_field(input_field(o, doc), [&]<class S>(std::type_identity<S>) {
    const auto [v1, v2] = two_tensors<S>(doc);
    return Outcome{subspace_category_to_json(classify_2d_subspace(v1, v2))};
  });
}

Outcome product_pair(const Options& o) {
  const Json doc = read_json_file(o.in);
  return visit_field(input_field(o, doc), [&]<class S>(std::type_identity<S>) {
    const auto s = vector_set_from_json<S>(doc);
    if (s.size() != 2) throw Error(Errc::SchemaError, "expected exactly two vectors", "/vectors");
    S a1(1), a2(1);
    if (!o.coeffs.empty()) {
      if (o.coeffs.size() != 2) throw Error(Errc::InvalidArgument, "--coeffs takes two scalars", "--coeffs");
      a1 = field_traits<S>::parse(o.coeffs[0]);
      a2 = field_traits<S>::parse(o.coeffs[1]);
    }
    return Outcome{pair_sum_to_json(is_product_sum_pair(s[0], s[1], a1, a2))};
  });
}

Outcome tight_gen(const Options& o) {
  return visit_field(flag_field(o, FieldSpec::rationals()), [&]<class S>(std::type_identity<S>) {
    return Outcome{vector_set_to_json(tight_example<S>(o.n))};
  });
}

Outcome verify(const Options& o) {
  const Target target = parse_target(o.target);
  const Json doc = read_json_file(o.in);
  return visit_field(input_field(o, doc), [&]<class S>(std::type_identity<S>) {
    const auto s = vector_set_from_json<S>(doc);
    const Verdict v = verify_target(s, target, o.r, o.budget);
    return Outcome{verdict_to_json(v), v.status == Status::counterexample ? kExitCounterexample : kExitClean};
  });
}

Outcome search(const Options& o) {
  const Target target = parse_target(o.target);
  SearchSpace space;
  space.field = flag_field(o, FieldSpec::prime(2));
  if (!o.dims.empty()) space.dims = o.dims;
  space.mode_dim = o.mode_dim;
  std::tie(space.m_min, space.m_max) = parse_range(o.m_range, "--m");
  std::tie(space.n_min, space.n_max) = parse_range(o.n_range, "--n");
  space.relabel_symmetry = o.relabel;
  return visit_field(space.field, [&]<class S>(std::type_identity<S>) {
    const auto report = search_counterexamples<S>(space, target, o.workers, o.budget);
    return Outcome{search_report_to_json(report), report.counterexample_count > 0 ? kExitCounterexample : kExitClean};
  });
}

Outcome pairing(const Options& o) {
  const Json xs_doc = read_json_file(o.in);
  const Json ys_doc = read_json_file(o.with);
  const auto f = input_field(o, xs_doc);
  if (field_from_json(ys_doc) != f) throw Error(Errc::SignatureMismatch, "the two files use different fields", "/field");
  return visit_field(f, [&]<class S>(std::type_identity<S>) {
    const auto xs = vector_set_from_json<S>(xs_doc);
    const auto ys = vector_set_from_json<S>(ys_doc);
    return Outcome{pairing_to_json<S>(reduction_pairing(xs, ys))};
  });
}

Json error_document(const std::string& code, const std::string& message, const std::string& location) {
  Json out;
  out["error"] = code;
  out["message"] = message;
  out["location"] = location;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verifiers and searches for zero-sum sets of product vectors"};
  app.name("tensorlab");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", o.field, "Field: a prime in {2,3,5,7} or Q");
  app.add_option("--budget", o.budget, "Upper bound on enumerated candidates");
  app.add_option("--workers", o.workers, "Worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for pseudo-random instance generation");

  std::function<Outcome(const Options&)> action;
  auto add = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto add_in = [&](CLI::App* sub) { sub->add_option("--in", o.in, "Instance file")->required(); };

  auto* gp = add("check-gp", "Check (d_1..d_m)-general position", check_gp);
  add_in(gp);
  gp->add_option("--d", o.d, "Requested dimensions")->delimiter(',')->required();

  auto* kc = add("kruskal-cert", "Kruskal ranks and uniqueness certificate", kruskal_cert);
  add_in(kc);
  kc->add_option("--gamma", o.gamma, "1-based subset for the rank prediction")->delimiter(',');
  kc->add_option("--r", o.r, "Target rank for the subset prediction");

  auto* rk = add("rank", "Exact tensor rank of a tensor or of the sum of an instance", rank);
  add_in(rk);
  rk->add_option("--max-rank", o.max_rank, "Fail if the rank exceeds this bound");
  rk->add_option("--unique", o.unique, "Check that the rank is this value and count decompositions");

  add_in(add("zero-subsets", "All nonempty zero-sum subsets", zero_subsets));
  add_in(add("partition", "Minimal zero partition", partition));

  auto* ch = add("chain", "Chain cover of two partitions", chain);
  ch->add_option("--in", o.in, "Chain problem file");
  ch->add_option("--n", o.n, "Ground set size for a seeded random problem");

  add_in(add("classify-subspace", "Category of a two-dimensional subspace", classify_subspace));

  auto* pp = add("product-pair", "Is a1 x1 + a2 x2 a product vector", product_pair);
  add_in(pp);
  pp->add_option("--coeffs", o.coeffs, "Two scalars a1,a2")->delimiter(',');

  auto* tg = add("tight-gen", "Tight instance with n vectors in n - 2 modes", tight_gen);
  tg->add_option("--n", o.n, "Number of vectors")->required();

  auto* vf = add("verify", "Verify one instance against a target statement", verify);
  add_in(vf);
  vf->add_option("--target", o.target, "conj13, thm32, thm41 or conj52")->required();
  vf->add_option("--r", o.r, "Rank of the total sum for the rank versions");

  auto* se = add("search", "Exhaustive counterexample search", search);
  se->add_option("--target", o.target, "conj13, thm32, thm41 or conj52")->required();
  se->add_option("--dims", o.dims, "Explicit dims of one signature")->delimiter(',');
  se->add_option("--mode-dim", o.mode_dim, "Dimension of every mode when --dims is absent");
  se->add_option("--m", o.m_range, "Mode count or range A..B");
  se->add_option("--n", o.n_range, "Vector count or range A..B");
  se->add_flag("--relabel", o.relabel, "Pin the first vector using basis relabelling");

  auto* pa = add("pairing", "Pair two decompositions of the same tensor", pairing);
  add_in(pa);
  pa->add_option("--with", o.with, "Second instance file")->required();

  Outcome result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    result = action(o);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    out << error_document("UsageError", e.what(), "arguments").dump(2) << '\n';
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << '\n';
    out << error_document(std::string(to_string(e.code())), e.what(), e.location()).dump(2) << '\n';
    return is_falsification(e.code()) ? kExitCounterexample : kExitInvalidInput;
  }
  out << result.doc.dump(2) << '\n';
  return result.code;
}

}  // namespace tensorlab::cli
