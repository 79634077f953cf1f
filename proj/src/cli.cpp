#include "gridmagic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gridmagic/document.hpp"
#include "gridmagic/oracle.hpp"
#include "gridmagic/verify.hpp"

namespace gridmagic {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::string dims_text(std::span<const std::int64_t> dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "x" : "") + std::to_string(dims[i]);
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(std::ostream& out, const LabelingDocument& doc, const MagicReport& r) {
  out << "kind: " << to_string(r.kind) << "\n";
  out << "grid: " << dims_text(doc.dims) << "\n";
  out << "bijective: " << yes_no(r.bijective) << "\n";
  if (r.vertex_range_ok) out << "vertex range [1,|V|]: " << yes_no(*r.vertex_range_ok) << "\n";
  out << "distinct cube sums: " << r.distinct_sums << " [";
  for (std::size_t i = 0; i < r.cube_sum_values.size(); ++i) out << (i ? " " : "") << r.cube_sum_values[i];
  if (static_cast<std::int64_t>(r.cube_sum_values.size()) < r.distinct_sums) out << " ...";
  out << "]\n";
  if (r.predicted_sum) {
    out << "predicted sum: " << *r.predicted_sum;
    if (r.matches_prediction) out << (*r.matches_prediction ? " (matches)" : " (differs)");
    out << "\n";
  }
  if (r.accepted())
    out << "MAGIC sum=" << *r.magic_sum << "\n";
  else
    out << "NOT_MAGIC distinct=" << r.distinct_sums << "\n";
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw IoError("cannot write '" + path + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Q_d-magic and Q_d-supermagic labelings of d-dimensional grid graphs", "gridmagic"};
  app.require_subcommand(1);

  std::vector<std::int64_t> dims;
  auto add_dims = [&](CLI::App* sub) {
    sub->add_option("--dims", dims, "Side lengths, comma separated (e.g. 5,3,3)")->required()->delimiter(',');
  };

  std::string kind = "total";
  std::string out_path;
  std::string format = "json";
  auto* generate = app.add_subcommand("generate", "Build the construction and write a labeling document");
  add_dims(generate);
  generate->add_option("--kind", kind, "total, vertex or edge")->check(CLI::IsMember({"total", "vertex", "edge"}));
  generate->add_option("--out", out_path, "Output file (default stdout)");
  generate->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string file;
  auto* verify = app.add_subcommand("verify", "Check a labeling document over every unit cube");
  verify->add_option("file", file, "Document path, or - for stdin")->required();

  auto* predict = app.add_subcommand("predict", "Print the closed-form magic sums");
  add_dims(predict);

  std::string mode = "vertex";
  std::int64_t budget = SearchBudget{}.max_assignments;
  std::optional<std::int64_t> target;
  auto* search = app.add_subcommand("search", "Exhaustive search over all labelings of a tiny grid");
  add_dims(search);
  search->add_option("--mode", mode, "vertex, edge or supermagic")
      ->check(CLI::IsMember({"vertex", "edge", "supermagic"}));
  search->add_option("--budget", budget, "Maximum number of candidate labelings")->check(CLI::PositiveNumber);
  search->add_option("--target", target, "Only count labelings with this sum, pruning the rest");

  std::string style;
  auto* render_cmd = app.add_subcommand("render", "Emit figure text for a labeling document");
  render_cmd->add_option("file", file, "Document path, or - for stdin")->required();
  render_cmd->add_option("--style", style, "tikz2d, tikz3d, dot or csv")
      ->required()
      ->check(CLI::IsMember({"tikz2d", "tikz3d", "dot", "csv"}));

  auto* cover = app.add_subcommand("cover", "Check that every edge lies in a unit cube");
  add_dims(cover);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto spec_from_dims = [&] { return canonicalize(dims); };

    if (generate->parsed()) {
      spec_from_dims();
      const auto doc = generate_document(dims, label_kind_from_string(kind));
      write_output(out_path, format == "csv" ? render(doc, RenderStyle::Csv) : save(doc), out);
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto doc = load(read_input(file, in));
      const auto report = verify_document(doc);
      print_report(out, doc, report);
      return report.accepted() ? kExitOk : kExitRejected;
    }
    if (predict->parsed()) {
      const auto p = closed_form_sums(spec_from_dims().spec);
      out << "c_vertex=" << p.c_vertex << " c_edge=" << p.c_edge << " c_total=" << p.c_total << "\n";
      return kExitOk;
    }
    if (search->parsed()) {
      const auto canon = spec_from_dims();
      SearchBudget b{budget, search_mode_from_string(mode), target};
      const auto size = search_space_size(canon.spec, b.mode);
      if (!size || *size > b.max_assignments) throw BudgetExceeded(size, b.max_assignments);
      const auto result = exhaustive_search(canon.spec, b, construction_sequence(canon.spec, b.mode), 0);
      out << "grid: " << dims_text(canon.spec.dims()) << " mode: " << mode << "\n";
      out << "examined=" << result.examined << " magic=" << result.magic_count << "\n";
      for (const auto& [sum, count] : result.sum_histogram) out << "sum=" << sum << " count=" << count << "\n";
      out << "construction_found=" << (result.probe_found.value_or(false) ? "true" : "false") << "\n";
      return kExitOk;
    }
    if (render_cmd->parsed()) {
      const auto doc = load(read_input(file, in));
      out << render(doc, render_style_from_string(style));
      return kExitOk;
    }
    if (cover->parsed()) {
      const bool ok = check_h_covering(spec_from_dims().spec);
      out << "covered=" << (ok ? "true" : "false") << "\n";
      return ok ? kExitOk : kExitRejected;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::VersionMismatch: return kExitIo;
      case ErrorCode::DimensionTooSmall:
      case ErrorCode::DimensionOrderViolation:
      case ErrorCode::Overflow: return kExitUsage;
      default: return kExitRejected;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitUsage;
}

}  // namespace gridmagic
