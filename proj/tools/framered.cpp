// Command-line front end: compute redundancy reports, construct frames with
// prescribed spectra or redundancy pairs, partition frames, and run the
// invariant battery. Exit codes: 0 ok, 1 parse error, 2 precondition
// failure, 3 infeasible request.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "framered/checks.hpp"
#include "framered/construct.hpp"
#include "framered/errors.hpp"
#include "framered/json_io.hpp"
#include "framered/partition.hpp"
#include "framered/redundancy.hpp"

namespace {

using namespace framered;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInfeasible = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text << "\n";
}

AnyFrame load_frame(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  if (format == "csv") return read_frame_csv(text);
  return read_frame_json(text);
}

// --at accepts comma-separated components; each one is either a real number
// or re:im.
template <Scalar T>
Vec<T> parse_point(const std::string& text, std::size_t dim) {
  Vec<T> out;
  std::istringstream cells(text);
  std::string cell;
  while (std::getline(cells, cell, ',')) {
    const std::size_t colon = cell.find(':');
    try {
      if (colon == std::string::npos) {
        out.push_back(T(std::stod(cell)));
      } else {
        if constexpr (std::is_same_v<T, double>) {
          throw ParseError("complex component for a real frame: " + cell);
        } else {
          out.push_back(cplx(std::stod(cell.substr(0, colon)),
                             std::stod(cell.substr(colon + 1))));
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("invalid --at component: '" + cell + "'");
    }
  }
  if (out.size() != dim)
    throw ParseError("--at needs exactly dim components");
  return out;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("FRAMERED_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("FRAMERED_SEED is not an unsigned integer");
    }
  }
  return flag_seed;
}

int run_compute(const std::string& input, const std::string& format,
                const std::string& at, const std::string& out_path) {
  const AnyFrame frame = load_frame(input, format);
  std::visit(
      [&](const auto& f) {
        using T = typename std::decay_t<decltype(f)>::scalar_type;
        if (!at.empty()) {
          const auto x = parse_point<T>(at, f.dim());
          JsonWriter w;
          w.begin_object();
          w.key("at").value(redundancy_at(f, x));
          w.end_object();
          emit(w.str(), out_path);
          return;
        }
        emit(write_report_json(redundancy_report(f)), out_path);
      },
      frame);
  return kExitOk;
}

int run_partition(const std::string& input, const std::string& format,
                  const std::string& mode, const std::string& out_path) {
  const AnyFrame frame = load_frame(input, format);
  std::visit(
      [&](const auto& f) {
        IndexPartition partition;
        double bound = 0.0;
        const RedundancyReport report = redundancy_report(f);
        if (mode == "independent") {
          partition = partition_independent(f);
          bound = std::ceil(report.upper - 1e-9);
        } else {
          partition = pack_spanning(f);
          bound = std::floor(report.lower + 1e-9);
        }
        // Partition document plus the asserted redundancy bound and any
        // unused indices.
        JsonWriter w;
        w.begin_object();
        w.key("kind").value(std::string(mode));
        w.key("blocks").begin_array();
        for (const auto& block : partition.blocks) {
          w.begin_array();
          for (std::size_t idx : block) w.value(idx);
          w.end_array();
        }
        w.end_array();
        w.key("covered").value(partition.covered);
        w.key("bound").value(bound);
        w.key("leftover").begin_array();
        for (std::size_t idx : partition.leftover()) w.value(idx);
        w.end_array();
        w.end_object();
        emit(w.str(), out_path);
      },
      frame);
  return kExitOk;
}

int run_check(const std::vector<std::string>& inputs,
              const std::string& format, double tol, std::uint64_t seed,
              const std::string& out_path) {
  const AnyFrame first = load_frame(inputs[0], format);
  std::optional<bool> equivalence;
  if (inputs.size() == 2) {
    const AnyFrame second = load_frame(inputs[1], format);
    if (first.index() != second.index())
      throw DimensionMismatch("cannot compare frames over different fields");
    equivalence = std::visit(
        [&](const auto& f) {
          return equivalent(f, std::get<std::decay_t<decltype(f)>>(second),
                            tol);
        },
        first);
  }

  bool all_pass = true;
  JsonWriter w;
  w.begin_object();
  std::visit(
      [&](const auto& f) {
        const PropertyReport report = check_frame(f, seed);
        w.key("lower").value(report.report.lower);
        w.key("upper").value(report.report.upper);
        w.key("uniform").value(report.report.uniform);
        w.key("tight").value(report.tight);
        w.key("nonzero_count").value(report.report.nonzero_count);
        w.key("checks").begin_object();
        for (const PropertyCheck& c : report.checks) {
          w.key(c.name).begin_object();
          w.key("applicable").value(c.applicable);
          w.key("pass").value(c.pass);
          w.end_object();
        }
        w.end_object();
        all_pass = report.all_pass();
      },
      first);
  if (equivalence) w.key("equivalent").value(*equivalence);
  w.key("all_pass").value(all_pass);
  w.end_object();
  emit(w.str(), out_path);
  return all_pass ? kExitOk : kExitPrecondition;
}

int run_construct(const std::vector<double>& spectrum, std::size_t count,
                  const std::vector<double>& redundancies, std::size_t dim,
                  const std::vector<std::size_t>& tight,
                  const std::string& field, bool verbose,
                  const std::string& out_path) {
  int modes = 0;
  if (!spectrum.empty()) ++modes;
  if (!redundancies.empty()) ++modes;
  if (!tight.empty()) ++modes;
  if (modes != 1)
    throw ParseError(
        "construct needs exactly one of --spectrum, --redundancies, --tight");

  SpectrumSpec spec;
  if (!spectrum.empty()) {
    if (count == 0) throw ParseError("--spectrum requires --count");
    spec = SpectrumSpec{spectrum, count};
  } else if (!redundancies.empty()) {
    if (redundancies.size() != 2)
      throw ParseError("--redundancies takes exactly r1 r2");
    if (dim == 0 || count == 0)
      throw ParseError("--redundancies requires --dim and --count");
  } else {
    if (tight.size() != 2) throw ParseError("--tight takes exactly n N");
  }

  const bool complex_field = field == "complex";
  auto build = [&]<Scalar T>() {
    std::pair<Frame<T>, RotationLog> made = [&] {
      if (!spectrum.empty()) return frame_with_spectrum_logged<T>(spec);
      if (!redundancies.empty()) {
        RedundancyRequest request{dim, count, redundancies[0],
                                  redundancies[1]};
        return std::pair<Frame<T>, RotationLog>{
            frame_with_redundancies<T>(request), RotationLog{}};
      }
      return std::pair<Frame<T>, RotationLog>{
          tight_witness<T>(tight[0], tight[1]), RotationLog{}};
    }();
    if (verbose) {
      for (const PlaneRotation& r : made.second) {
        std::cerr << "rotation i=" << r.i << " j=" << r.j
                  << " angle=" << format_double(r.angle)
                  << " phase=" << format_double(r.phase) << "\n";
      }
    }
    emit(write_frame_json(made.first), out_path);
  };
  if (complex_field)
    build.template operator()<cplx>();
  else
    build.template operator()<double>();
  return kExitOk;
}

int classify(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const InfeasibleRequest*>(&e)) return kExitInfeasible;
  if (dynamic_cast<const InvalidSpectrum*>(&e)) return kExitInfeasible;
  return kExitPrecondition;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-frame redundancy toolbox"};
  app.require_subcommand(1);

  std::string input;
  std::string input2;
  std::string out_path;
  std::string format = "json";
  std::string at;
  std::string mode;
  std::string field = "real";
  std::vector<double> spectrum;
  std::vector<double> redundancies;
  std::vector<std::size_t> tight;
  std::size_t count = 0;
  std::size_t dim = 0;
  double tol = -1.0;
  std::uint64_t seed = 0;
  bool verbose = false;

  CLI::App* compute = app.add_subcommand("compute", "redundancy report");
  compute->add_option("input", input)->required();
  compute->add_option("--at", at, "evaluate the redundancy function instead");
  compute->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("-o,--output", out_path);

  CLI::App* construct = app.add_subcommand("construct", "synthesize a frame");
  construct->add_option("--spectrum", spectrum, "target eigenvalues");
  construct->add_option("--count", count, "number of vectors N");
  construct->add_option("--redundancies", redundancies, "target r1 r2")
      ->expected(2);
  construct->add_option("--dim", dim, "dimension n");
  construct->add_option("--tight", tight, "tight witness: n N")->expected(2);
  construct->add_option("--field", field)
      ->check(CLI::IsMember({"real", "complex"}));
  construct->add_flag("--verbose", verbose, "print the rotation log");
  construct->add_option("-o,--output", out_path);

  CLI::App* partition = app.add_subcommand("partition", "index partition");
  partition->add_option("input", input)->required();
  partition->add_option("--mode", mode)
      ->required()
      ->check(CLI::IsMember({"independent", "spanning"}));
  partition->add_option("--format", format)
      ->check(CLI::IsMember({"json", "csv"}));
  partition->add_option("-o,--output", out_path);

  CLI::App* check = app.add_subcommand("check", "invariant battery");
  check->add_option("input", input)->required();
  check->add_option("input2", input2);
  check->add_option("--tol", tol, "equivalence tolerance");
  check->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  check->add_option("--seed", seed);
  check->add_option("-o,--output", out_path);

  CLI::App* equiv = app.add_subcommand("equiv", "two-file equivalence check");
  equiv->add_option("input", input)->required();
  equiv->add_option("input2", input2)->required();
  equiv->add_option("--tol", tol, "equivalence tolerance");
  equiv->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  equiv->add_option("--seed", seed);
  equiv->add_option("-o,--output", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    seed = effective_seed(seed);
    if (compute->parsed())
      return run_compute(input, format, at, out_path);
    if (construct->parsed())
      return run_construct(spectrum, count, redundancies, dim, tight, field,
                           verbose, out_path);
    if (partition->parsed())
      return run_partition(input, format, mode, out_path);
    if (check->parsed() || equiv->parsed()) {
      std::vector<std::string> inputs{input};
      if (!input2.empty()) inputs.push_back(input2);
      if (equiv->parsed() && inputs.size() != 2)
        throw ParseError("equiv needs two frame files");
      return run_check(inputs, format, tol, seed, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
