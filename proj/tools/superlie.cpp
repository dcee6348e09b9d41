// Command-line front end. Exit status: 0 success, 1 a mathematical check
// failed, 2 bad invocation or unreadable input.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "presentation.hpp"
#include "superlie/classical.hpp"
#include "superlie/error.hpp"

using namespace superlie;

namespace {

enum class Format { text, machine };

struct Source {
  std::string path;
  std::string family;
  int m = 0;
  int n = 0;
  bool corrected = false;

  void attach(CLI::App* cmd, bool positional = true) {
    if (positional)
      cmd->add_option("input", path, "presentation or Cartan data file");
    else
      cmd->add_option("--relations", path, "presentation or Cartan data file");
    cmd->add_option("--family", family, "sl, b, b0, c or d");
    cmd->add_option("--m", m, "first family parameter");
    cmd->add_option("--n", n, "second family parameter");
    cmd->add_flag("--corrected", corrected, "use the corrected family relations");
  }

  std::optional<FamilySpec> spec() const {
    if (family.empty()) return std::nullopt;
    auto f = FamilySpec::from_name(family, m, n);
    f.validate();
    return f;
  }
  Reading reading() const { return corrected ? Reading::corrected : Reading::literal; }
};

struct Options {
  std::size_t max_degree = 8;
  std::string mode = "lie";
  Format format = Format::text;
  unsigned workers = 0;
  std::uint64_t seed = 20240601;
};

// Records are space separated in text form and tab separated in machine form.
std::string join(const Options& o, std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) out += o.format == Format::machine ? '\t' : ' ';
    out += f;
  }
  return out;
}

Mode parse_mode(const std::string& s) {
  return s == "assoc" ? Mode::associative : Mode::lie;
}

// Relations as given: the presentation, the Kac-Moody relations of Cartan
// data, or R(A, tau) of a family.
RelationSet given_relations(const Source& src) {
  if (auto f = src.spec()) return family_relations(*f, src.reading());
  if (src.path.empty())
    throw Error(ErrorKind::parameter_range, "an input file or --family is required");
  auto in = cli::read_input(src.path);
  if (in.cartan) return build_relations(in.data).all();
  return in.relations;
}

// A relation set to reduce against: Cartan data is first completed.
RelationSet reducing_relations(const Source& src, const Options& o) {
  if (!src.spec() && !src.path.empty()) {
    auto in = cli::read_input(src.path);
    if (in.cartan) return assemble_gsb(in.data, o.max_degree, o.workers).set;
    return in.relations;
  }
  return given_relations(src);
}

int cmd_complete(const Source& src, const Options& o) {
  RelationSet s = given_relations(src);
  auto r = complete(s, parse_mode(o.mode), o.max_degree, o.workers);
  for (std::size_t i = s.size(); i < r.set.size(); ++i)
    std::cout << join(o, {"REL", std::to_string(r.set.leading_word(i).size()),
                          format_polynomial(r.set[i].poly)})
              << '\n';
  std::cout << join(o, {"FIXPOINT", r.fixpoint ? "true" : "false"}) << '\n';
  return 0;
}

int cmd_check(const Source& src, const Options& o, std::size_t max_witness) {
  RelationSet s = given_relations(src);
  ClosureOptions opt;
  opt.workers = o.workers;
  if (max_witness) opt.max_witness = max_witness;
  std::vector<Mode> modes;
  if (o.mode == "both")
    modes = {Mode::lie, Mode::associative};
  else
    modes = {parse_mode(o.mode)};
  bool all_closed = true;
  for (Mode mode : modes) {
    auto report = is_closed(s, mode, opt);
    if (modes.size() > 1) std::cout << join(o, {"MODE", mode == Mode::lie ? "lie" : "assoc"}) << '\n';
    if (report.closed()) std::cout << "CLOSED\n";
    for (const auto& r : report.nonzero)
      std::cout << join(o, {"NONZERO", s.alphabet()->format(r.overlap.w),
                            format_polynomial(r.value)})
                << '\n';
    all_closed &= report.closed();
  }
  return all_closed ? 0 : 1;
}

int cmd_nf(const Source& src, const Options& o, const std::string& element) {
  RelationSet s = reducing_relations(src, o);
  SuperPolynomial p;
  try {
    p = parse_polynomial(element, s.alphabet());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
  SuperPolynomial r = parse_mode(o.mode) == Mode::lie && is_lie_element(p)
                          ? normal_form_lie(p, s)
                          : normal_form_assoc(p, s);
  std::cout << format_polynomial(r) << '\n';
  return 0;
}

int cmd_basis(const Source& src, const Options& o, std::size_t max_len, bool enveloping) {
  RelationSet s = reducing_relations(src, o);
  if (enveloping) {
    auto counts = reduced_word_degree_counts(s, max_len, o.max_degree);
    for (std::size_t k = 0; k < counts.size(); ++k)
      std::cout << join(o, {"DEGREE", std::to_string(k), std::to_string(counts[k])}) << '\n';
    return 0;
  }
  auto basis = enumerate_reduced_super_ls_monomials(s, *s.alphabet(), max_len);
  for (const auto& t : basis)
    std::cout << join(o, {"MONOMIAL", std::to_string(t.length()),
                          format_naword(t, *s.alphabet())})
              << '\n';
  std::cout << join(o, {"COUNT", std::to_string(basis.size())}) << '\n';
  return 0;
}

int cmd_verify(const Source& src, const Options& o, bool force_matrix) {
  auto f = src.spec();
  if (!f) throw Error(ErrorKind::parameter_range, "verify needs --family");
  auto s = family_relations(*f, src.reading());
  ClosureOptions opt;
  opt.workers = o.workers;
  opt.max_failures = 1;
  bool closed = is_closed(s, Mode::lie, opt).closed() &&
                is_closed(s, Mode::associative, opt).closed();
  auto basis = reduced_basis(*f, src.reading());
  auto beyond = reduced_words_beyond_cap(*f, src.reading());
  std::size_t dim = dimension_formula(*f);
  auto matrix = verify_by_matrices(*f, force_matrix, src.reading());

  std::cout << join(o, {closed ? "CLOSED" : "NOT-CLOSED"}) << '\n';
  std::cout << join(o, {"BASIS", std::to_string(basis.size())}) << '\n';
  if (!beyond.empty())
    std::cout << join(o, {"BEYOND-CAP", std::to_string(beyond.size())}) << '\n';
  std::cout << join(o, {"DIM", std::to_string(dim)}) << '\n';
  std::cout << join(o, {"MATRIX", matrix.skipped ? "skipped" : matrix.ok() ? "ok" : "FAIL"})
            << '\n';
  for (const auto& m : matrix.failures) std::cout << join(o, {"MATRIX-FAIL", m}) << '\n';
  bool ok = closed && beyond.empty() && basis.size() == dim &&
            (matrix.skipped || matrix.ok());
  return ok ? 0 : 1;
}

// A few fast end-to-end checks with seeded random data.
int cmd_selftest(const Options& o) {
  bool all = true;
  auto line = [&](const std::string& name, bool ok) {
    std::cout << join(o, {ok ? "PASS" : "FAIL", name}) << '\n';
    all &= ok;
  };
  auto sl21 = FamilySpec::from_name("sl", 2, 1);
  auto s = family_relations(sl21);
  line("sl(2,1) closed", is_closed(s, Mode::lie).closed() &&
                             is_closed(s, Mode::associative).closed());
  line("sl(2,1) dimension", reduced_basis(sl21).size() == dimension_formula(sl21));
  line("sl(2,1) matrices", verify_by_matrices(sl21).ok());

  std::mt19937_64 rng(o.seed);
  bool ideal = true;
  for (int t = 0; t < 50; ++t) {
    SuperPolynomial p(s.alphabet());
    for (int k = 0; k < 3; ++k) {
      const auto& r = s[rng() % s.size()].poly;
      Word a, b;
      for (std::size_t i = rng() % 3; i > 0; --i) a.push_back(Letter(rng() % s.alphabet()->size()));
      for (std::size_t i = rng() % 3; i > 0; --i) b.push_back(Letter(rng() % s.alphabet()->size()));
      p += r.sandwich(Rational(int(rng() % 7) - 3), a, b);
    }
    ideal &= normal_form_assoc(p, s).is_zero();
  }
  line("ideal elements reduce to zero", ideal);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-Shirshov bases of Lie superalgebras"};
  app.require_subcommand(1);
  Options o;
  std::string format = "text";
  std::optional<unsigned> workers;
  app.add_option("--format", format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--workers", workers, "worker threads (default: SUPERLIE_WORKERS)");
  app.add_option("--seed", o.seed, "seed for randomized checks");

  Source src;
  std::size_t max_witness = 0, max_len = 0;
  bool enveloping = false, force_matrix = false;
  std::string element;

  auto* complete_cmd = app.add_subcommand("complete", "complete a relation set");
  src.attach(complete_cmd);
  complete_cmd->add_option("--max-degree", o.max_degree)->check(CLI::PositiveNumber);
  complete_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"lie", "assoc"}));

  auto* check_cmd = app.add_subcommand("check", "test closure under composition");
  src.attach(check_cmd);
  check_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"lie", "assoc", "both"}));
  check_cmd->add_option("--max-witness", max_witness, "skip longer overlaps");

  auto* nf_cmd = app.add_subcommand("nf", "normal form of an element");
  nf_cmd->add_option("element", element, "polynomial")->required();
  src.attach(nf_cmd, false);
  nf_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"lie", "assoc"}));
  nf_cmd->add_option("--max-degree", o.max_degree, "completion bound for Cartan data")
      ->check(CLI::PositiveNumber);

  auto* basis_cmd = app.add_subcommand("basis", "reduced monomials");
  src.attach(basis_cmd);
  basis_cmd->add_option("--max-len", max_len, "word length cap (default 2(m+n) or 8)");
  basis_cmd->add_flag("--enveloping", enveloping, "per-degree counts of reduced words");
  basis_cmd->add_option("--max-degree", o.max_degree)->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "check a classical family");
  src.attach(verify_cmd);
  verify_cmd->add_flag("--force-matrix", force_matrix, "run the matrix check for C too");

  auto* selftest_cmd = app.add_subcommand("selftest", "quick end-to-end checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  o.format = format == "machine" ? Format::machine : Format::text;
  if (workers) {
    o.workers = *workers;
  } else if (const char* env = std::getenv("SUPERLIE_WORKERS")) {
    o.workers = unsigned(std::strtoul(env, nullptr, 10));
  }

  try {
    if (*complete_cmd) return cmd_complete(src, o);
    if (*check_cmd) return cmd_check(src, o, max_witness);
    if (*nf_cmd) return cmd_nf(src, o, element);
    if (*basis_cmd) {
      if (max_len == 0) {
        auto f = src.spec();
        max_len = f ? basis_length_cap(*f) : 8;
      }
      return cmd_basis(src, o, max_len, enveloping);
    }
    if (*verify_cmd) return cmd_verify(src, o, force_matrix);
    if (*selftest_cmd) return cmd_selftest(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
