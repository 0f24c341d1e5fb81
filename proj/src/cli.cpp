#include "nsm/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "nsm/io.hpp"

namespace nsm {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitShape = 3;
constexpr int kExitUsage = 4;

/// Thrown for invocation problems CLI11 cannot see (wrong operand count
/// for the chosen kind, bad NSM_PRECISION, ...).
struct UsageError {
  std::string message;
};

int table_precision() {
  const char* raw = std::getenv("NSM_PRECISION");
  if (raw == nullptr || *raw == '\0') return 4;
  int value = 0;
  const char* end = raw + std::string_view(raw).size();
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value < 0 || value > 17) {
    throw UsageError{"NSM_PRECISION must be an integer in [0, 17], got '" +
                     std::string(raw) + "'"};
  }
  return value;
}

void write_matrix(const NsMatrix& matrix, const std::string& out_path,
                  std::ostream& out) {
  const std::string text = serialize_matrix(matrix);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << text)) {
    throw ValidationError("cannot write file '" + out_path + "'");
  }
}

struct Options {
  std::string op_kind;
  std::string product_kind = "and";
  std::string norm_name = "minmax";
  std::string complement_mode = "one_minus_i";
  std::string format = "table";
  std::string file_a;
  std::string file_b;
  std::string out_path;
};

ComplementMode parse_mode(const std::string& mode) {
  return mode == "identity_i" ? ComplementMode::identity_i
                              : ComplementMode::one_minus_i;
}

int run_validate(const Options& opt, std::ostream& out) {
  const NsMatrix matrix = read_matrix_file(opt.file_a);
  out << "OK " << matrix.row_count() << "x" << matrix.col_count() << "\n";
  return kExitOk;
}

int run_op(const Options& opt, std::ostream& out) {
  const bool binary = opt.op_kind == "union" || opt.op_kind == "intersect";
  if (binary && opt.file_b.empty()) {
    throw UsageError{"op --kind " + opt.op_kind + " needs two input files"};
  }
  if (!binary && !opt.file_b.empty()) {
    throw UsageError{"op --kind " + opt.op_kind + " takes a single input file"};
  }

  const NsMatrix a = read_matrix_file(opt.file_a);
  NsMatrix result = [&] {
    if (opt.op_kind == "complement") {
      return from_soft_set(
          set_complement(to_soft_set(a), parse_mode(opt.complement_mode)));
    }
    if (opt.op_kind == "transpose") {
      return transpose(a);
    }
    const NsMatrix b = read_matrix_file(opt.file_b);
    const NormPair& pair = resolve_norm(opt.norm_name);
    if (opt.op_kind == "union") {
      return from_soft_set(set_union(to_soft_set(a), to_soft_set(b), pair));
    }
    return from_soft_set(
        set_intersection(to_soft_set(a), to_soft_set(b), pair));
  }();
  write_matrix(result, opt.out_path, out);
  return kExitOk;
}

int run_product(const Options& opt, std::ostream& out) {
  const NsMatrix a = read_matrix_file(opt.file_a);
  const NsMatrix b = read_matrix_file(opt.file_b);
  const NormPair& pair = resolve_norm(opt.norm_name);
  const ProductKind kind =
      opt.product_kind == "or" ? ProductKind::Or : ProductKind::And;
  write_matrix(product(a, b, kind, pair), opt.out_path, out);
  return kExitOk;
}

int run_decide(const Options& opt, std::ostream& out) {
  const int precision = table_precision();
  const NsMatrix a = read_matrix_file(opt.file_a);
  const NsMatrix b = read_matrix_file(opt.file_b);
  const NormPair& pair = resolve_norm(opt.norm_name);
  const ProductKind kind =
      opt.product_kind == "or" ? ProductKind::Or : ProductKind::And;
  const DecisionOutcome outcome = nsm_decide(a, b, kind, pair);
  if (opt.format == "json") {
    out << serialize_outcome(outcome);
  } else {
    out << render_outcome_table(outcome, precision);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"neutrosophic soft set / matrix toolkit"};
  app.name("nsm");
  app.require_subcommand(1);

  Options opt;

  CLI::App* validate = app.add_subcommand("validate", "check a matrix file");
  validate->add_option("file", opt.file_a, "matrix JSON file")->required();

  const std::vector<std::string> norms{"drastic",   "bounded",  "einstein",
                                       "algebraic", "hamacher", "minmax"};

  CLI::App* op = app.add_subcommand("op", "apply a set/matrix operation");
  op->add_option("--kind", opt.op_kind, "operation")
      ->required()
      ->check(CLI::IsMember({"union", "intersect", "complement", "transpose"}));
  op->add_option("--norm", opt.norm_name, "t-norm/t-conorm pair")
      ->check(CLI::IsMember(norms, CLI::ignore_case));
  op->add_option("--complement-mode", opt.complement_mode,
                 "indeterminacy handling for complement")
      ->check(CLI::IsMember({"identity_i", "one_minus_i"}));
  op->add_option("A", opt.file_a, "first matrix file")->required();
  op->add_option("B", opt.file_b, "second matrix file (union/intersect)");
  op->add_option("-o,--output", opt.out_path, "write result here");

  CLI::App* prod = app.add_subcommand("product", "And/Or block product");
  prod->add_option("--kind", opt.product_kind, "product kind")
      ->required()
      ->check(CLI::IsMember({"and", "or"}));
  prod->add_option("--norm", opt.norm_name, "t-norm/t-conorm pair")
      ->check(CLI::IsMember(norms, CLI::ignore_case));
  prod->add_option("A", opt.file_a, "first matrix file")->required();
  prod->add_option("B", opt.file_b, "second matrix file")->required();
  prod->add_option("-o,--output", opt.out_path, "write result here");

  CLI::App* decide = app.add_subcommand("decide", "two-expert decision method");
  decide->add_option("--product", opt.product_kind, "product kind")
      ->check(CLI::IsMember({"and", "or"}));
  decide->add_option("--norm", opt.norm_name, "t-norm/t-conorm pair")
      ->check(CLI::IsMember(norms, CLI::ignore_case));
  decide->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  decide->add_option("A", opt.file_a, "first expert's matrix")->required();
  decide->add_option("B", opt.file_b, "second expert's matrix")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(opt, out);
    if (op->parsed()) return run_op(opt, out);
    if (prod->parsed()) return run_product(opt, out);
    return run_decide(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const UnknownNormError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ShapeMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kExitShape;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace nsm
