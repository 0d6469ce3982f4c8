#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pnc/binseq.hpp"
#include "pnc/error.hpp"
#include "pnc/family.hpp"
#include "pnc/generator.hpp"
#include "pnc/iso.hpp"
#include "pnc/nesting.hpp"
#include "pnc/text_format.hpp"

namespace pnc::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Circuit> read_input(const std::string& path, std::istream& in) {
  std::vector<Circuit> circuits;
  try {
    if (path.empty() || path == "-") {
      circuits = parse_circuits(in);
    } else {
      std::ifstream file(path);
      if (!file) throw UsageError("cannot open " + path);
      circuits = parse_circuits(file);
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (circuits.empty()) throw UsageError("no circuit in input");
  return circuits;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

int check(const std::vector<Circuit>& circuits, std::ostream& out) {
  int status = kOk;
  for (const Circuit& c : circuits) {
    try {
      const NestedCircuit p = recognize(c);
      out << "PNC m=" << p.depth() << " internal=" << join(p.internal().flattened()) << '\n';
    } catch (const NotPncError& e) {
      out << "NOT-PNC " << to_string(e.reason()) << '\n';
      status = kNegative;
    }
  }
  return status;
}

int decompose_cmd(const std::vector<Circuit>& circuits, std::ostream& out, std::ostream& err) {
  int status = kOk;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (i > 0) out << '\n';
    try {
      out << format_chain(decompose(recognize(circuits[i])));
    } catch (const NotPncError& e) {
      err << "error: " << e.what() << '\n';
      status = kNegative;
    }
  }
  return status;
}

int reduce(const std::vector<Circuit>& circuits, const std::string& kind, std::ostream& out,
           std::ostream& err) {
  int status = kOk;
  for (const Circuit& c : circuits) {
    try {
      if (kind == "all") {
        for (const Circuit& d : one_step_reductions(c)) out << format_circuit(d) << '\n';
      } else {
        const NestedCircuit p = recognize(c);
        const NestedCircuit d = kind == "zero" ? zero_reduction(p) : one_reduction(p);
        out << format_circuit(d.circuit()) << '\n';
      }
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      status = kNegative;
    }
  }
  return status;
}

std::optional<ReductionFamily> build_family(const Circuit& c, bool oracle, std::ostream& err) {
  if (oracle) return family_bfs_oracle(c);
  try {
    return family_closed_form(recognize(c));
  } catch (const NotPncError& e) {
    err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
}

int family(const std::vector<Circuit>& circuits, bool oracle, const std::string& dot_path,
           std::ostream& out, std::ostream& err) {
  int status = kOk;
  std::string dot;
  for (const Circuit& c : circuits) {
    auto fam = build_family(c, oracle, err);
    if (!fam) {
      status = kNegative;
      continue;
    }
    out << "# " << fam->size() << " members\n";
    for (const Circuit& member : fam->members()) out << format_circuit(member) << '\n';
    dot += family_to_dot(*fam);
  }
  if (!dot_path.empty() && !dot.empty()) write_file_atomically(dot_path, dot);
  return status;
}

int hasse(const std::vector<Circuit>& circuits, bool oracle, const std::string& output,
          std::ostream& out, std::ostream& err) {
  int status = kOk;
  std::string dot;
  for (const Circuit& c : circuits) {
    auto fam = build_family(c, oracle, err);
    if (!fam) {
      status = kNegative;
      continue;
    }
    dot += family_to_dot(*fam);
  }
  if (output.empty()) {
    out << dot;
  } else if (!dot.empty()) {
    write_file_atomically(output, dot);
  }
  return status;
}

int sm(std::size_t bound, const std::string& dot_path, std::ostream& out) {
  const SeqClassPoset poset = build_sm(bound);
  out << "# " << poset.size() << " classes\n";
  for (const SeqClass& cls : poset.classes) out << to_string(cls) << '\n';
  if (!dot_path.empty()) write_file_atomically(dot_path, sm_to_dot(poset));
  return kOk;
}

int iso(const std::vector<Circuit>& circuits, const std::string& depth_flag,
        const std::string& dot_path, std::ostream& out, std::ostream& err) {
  std::optional<std::size_t> forced_depth;
  if (depth_flag != "auto") {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(depth_flag, &used);
      if (used != depth_flag.size()) throw std::invalid_argument(depth_flag);
      forced_depth = value;
    } catch (const std::exception&) {
      throw UsageError("-m expects 'auto' or a non-negative integer, got '" + depth_flag + "'");
    }
  }

  int status = kOk;
  std::string dot;
  for (const Circuit& c : circuits) {
    try {
      const NestedCircuit p = recognize(c);
      const IsoWitness witness = build_isomorphism(p);
      const ReductionFamily fam = family_bfs_oracle(c);
      const SeqClassPoset poset = build_sm(forced_depth.value_or(p.depth()));
      const IsoReport report = verify_isomorphism(witness, fam, poset);
      out << render_report(witness, report);
      if (!report.passed()) status = kNegative;
      dot += isomorphism_to_dot(witness, fam, poset);
    } catch (const Error& e) {
      out << "FAIL " << to_string(e.code()) << '\n';
      err << "error: " << e.what() << '\n';
      status = kNegative;
    }
  }
  if (!dot_path.empty() && !dot.empty()) write_file_atomically(dot_path, dot);
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Perfectly nested circuits: recognition, reduction families, and S_m"};
  app.name("pnc");
  app.require_subcommand(1);

  std::string input;
  bool closed_form = false;
  bool oracle = false;
  std::string dot_path;
  std::string output;
  std::string kind = "all";
  std::string depth_flag = "auto";
  std::size_t bound = 0;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::size_t max_link = 0;

  auto add_input = [&input](CLI::App* cmd) {
    cmd->add_option("input", input, "Circuit file (default: standard input)");
  };

  auto* check_cmd = app.add_subcommand("check", "Recognize perfectly nested circuits");
  add_input(check_cmd);

  auto* decompose_sub = app.add_subcommand("decompose", "Print the chain of cycles of a PNC");
  add_input(decompose_sub);

  auto* reduce_cmd = app.add_subcommand("reduce", "Print one-step reductions");
  add_input(reduce_cmd);
  reduce_cmd->add_option("--kind", kind, "all, zero (0-reduction) or one (1-reduction)")
      ->check(CLI::IsMember({"all", "zero", "one"}));

  auto add_family_flags = [&](CLI::App* cmd) {
    auto* cf = cmd->add_flag("--closed-form", closed_form, "Chain-interval construction (default)");
    auto* bfs = cmd->add_flag("--oracle", oracle, "Breadth-first enumeration; accepts non-PNCs");
    cf->excludes(bfs);
  };

  auto* family_cmd = app.add_subcommand("family", "List the reduction family");
  add_input(family_cmd);
  add_family_flags(family_cmd);
  family_cmd->add_option("--dot", dot_path, "Write the Hasse diagram to this path");

  auto* hasse_cmd = app.add_subcommand("hasse", "Emit the family Hasse diagram as DOT");
  add_input(hasse_cmd);
  add_family_flags(hasse_cmd);
  hasse_cmd->add_option("-o,--output", output, "Write to this path instead of stdout");

  auto* sm_cmd = app.add_subcommand("sm", "List the classes of S_m");
  sm_cmd->add_option("-m", bound, "Sequence length bound")->required();
  sm_cmd->add_option("--dot", dot_path, "Write the Hasse diagram to this path");

  auto* iso_cmd = app.add_subcommand("iso", "Build and verify the isomorphism onto S_m");
  add_input(iso_cmd);
  iso_cmd->add_option("-m", depth_flag, "Bound of S_m: 'auto' uses the circuit's depth");
  iso_cmd->add_option("--dot", dot_path, "Write both Hasse diagrams to this path");

  auto* generate_cmd = app.add_subcommand("generate", "Print a random PNC");
  generate_cmd->add_option("--seed", seed, "Generator seed")->required();
  generate_cmd->add_option("--m", depth, "Number of internal vertices")->required();
  generate_cmd->add_option("--max-link", max_link, "Longest link (>= 3)")
      ->required()
      ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 20));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*check_cmd) return check(read_input(input, in), out);
    if (*decompose_sub) return decompose_cmd(read_input(input, in), out, err);
    if (*reduce_cmd) return reduce(read_input(input, in), kind, out, err);
    if (*family_cmd) return family(read_input(input, in), oracle, dot_path, out, err);
    if (*hasse_cmd) return hasse(read_input(input, in), oracle, output, out, err);
    if (*sm_cmd) return sm(bound, dot_path, out);
    if (*iso_cmd) return iso(read_input(input, in), depth_flag, dot_path, out, err);
    if (*generate_cmd) {
      out << format_circuit(random_pnc(seed, depth, max_link).circuit()) << '\n';
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pnc::cli
