// f2sumset: command-line front end for the sumset structure toolkit.
//
// Exit codes: 0 all verdicts true, 2 CONSTRUCTION_UNVERIFIED (or another
// false verdict) present, 1 usage or contract error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "f2sumset/flatten.hpp"
#include "f2sumset/fourier.hpp"
#include "f2sumset/harness.hpp"
#include "f2sumset/report.hpp"
#include "f2sumset/setio.hpp"
#include "f2sumset/setstats.hpp"
#include "f2sumset/structure.hpp"

namespace {

using namespace f2sumset;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnverified = 2;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Single-line JSON, or a header/value CSV pair of the top-level fields.
void emit(const Json& j, const std::string& format) {
  if (format == "csv" && j.is_object()) {
    std::string header, values;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!header.empty()) {
        header += ',';
        values += ',';
      }
      header += it.key();
      values += csv_cell(it.value());
    }
    std::cout << header << '\n' << values << '\n';
  } else {
    std::cout << j.dump() << '\n';
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sumsets, spectra and subspace structure in F2^n"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  int exit_code = kExitOk;

  // transform --------------------------------------------------------------
  auto* transform = app.add_subcommand("transform", "Fourier transform of a set's indicator");
  std::string transform_in;
  transform->add_option("set", transform_in, "Set file")->required();
  transform->callback([&] {
    const PointSet a = read_set_file(transform_in);
    const TransformTable t = indicator_transform(a);
    const char sep = format == "csv" ? ',' : '\t';
    if (format == "csv") std::cout << "xi,value\n";
    for (std::size_t xi = 0; xi < t.values.size(); ++xi) {
      std::cout << to_binary(static_cast<Bits>(xi), a.dimension()) << sep
                << format_double(t.values[xi]) << '\n';
    }
  });

  // spectrum ---------------------------------------------------------------
  auto* spec_cmd = app.add_subcommand("spectrum", "Alpha-spectrum of a set, as a set file");
  std::string spec_in, spec_out;
  double alpha = 0.0;
  spec_cmd->add_option("set", spec_in, "Set file")->required();
  spec_cmd->add_option("--alpha", alpha, "Threshold in (0, 1]")->required();
  spec_cmd->add_option("--out", spec_out, "Output path (default stdout)");
  spec_cmd->callback([&] {
    const PointSet s = spectrum(read_set_file(spec_in), alpha);
    if (spec_out.empty()) std::cout << format_set_text(s); else write_set_file(spec_out, s);
  });

  // sumset -----------------------------------------------------------------
  auto* sum_cmd = app.add_subcommand("sumset", "A + B");
  std::string sum_a, sum_b, sum_out;
  sum_cmd->add_option("a", sum_a)->required();
  sum_cmd->add_option("b", sum_b)->required();
  sum_cmd->add_option("--out", sum_out, "Write the sumset as a set file");
  sum_cmd->callback([&] {
    const PointSet a = read_set_file(sum_a);
    const PointSet b = read_set_file(sum_b);
    const PointSet s = sumset(a, b);
    Json j{{"size_a", a.size()}, {"size_b", b.size()}, {"sumset_size", s.size()}};
    if (!sum_out.empty()) {
      write_set_file(sum_out, s);
      j["set_file"] = sum_out;
    } else {
      Json elems = Json::array();
      s.for_each([&](Bits x) { elems.push_back(to_binary(x, s.dimension())); });
      j["elements"] = elems;
    }
    emit(j, format);
  });

  // doubling ---------------------------------------------------------------
  auto* dbl_cmd = app.add_subcommand("doubling", "Dbl(A, B) = |A+B| / (|A||B|)^{1/2}");
  std::string dbl_a, dbl_b;
  dbl_cmd->add_option("a", dbl_a)->required();
  dbl_cmd->add_option("b", dbl_b)->required();
  dbl_cmd->callback([&] {
    emit(to_json(doubling(read_set_file(dbl_a), read_set_file(dbl_b))), format);
  });

  // energy -----------------------------------------------------------------
  auto* en_cmd = app.add_subcommand(
      "energy", "Normalized additive energy of (A1, A2, A3, A4); two files mean (A, B, A, B)");
  std::vector<std::string> en_files;
  std::string en_method = "fourier";
  en_cmd->add_option("sets", en_files, "Two or four set files")->required()->expected(2, 4);
  en_cmd->add_option("--method", en_method)
      ->check(CLI::IsMember({"direct", "fourier", "both"}))
      ->capture_default_str();
  en_cmd->callback([&] {
    if (en_files.size() != 2 && en_files.size() != 4) {
      throw CLI::ValidationError("energy", "expects two or four set files");
    }
    std::vector<PointSet> sets;
    for (const auto& f : en_files) sets.push_back(read_set_file(f));
    if (sets.size() == 2) {
      sets.push_back(sets[0]);
      sets.push_back(sets[1]);
    }
    if (en_method == "direct") {
      emit(to_json(energy_direct(sets[0], sets[1], sets[2], sets[3])), format);
    } else if (en_method == "fourier") {
      emit(to_json(energy_fourier(sets[0], sets[1], sets[2], sets[3])), format);
    } else {
      const auto d = energy_direct(sets[0], sets[1], sets[2], sets[3]);
      const auto f = energy_fourier(sets[0], sets[1], sets[2], sets[3]);
      emit(Json{{"count", f.count}, {"omega", f.omega}, {"direct_count", d.count},
                {"fourier_count", f.count}, {"match", d.count == f.count}},
           format);
      if (d.count != f.count) exit_code = kExitError;
    }
  });

  // flatten ----------------------------------------------------------------
  auto* fl_cmd = app.add_subcommand("flatten", "Iterated spectral bisection until coherently flat");
  std::string fl_a, fl_b, fl_out_a, fl_out_b;
  double fl_k = 0.0;
  double fl_step = kDefaultStepCoefficient;
  fl_cmd->add_option("a", fl_a)->required();
  fl_cmd->add_option("b", fl_b)->required();
  fl_cmd->add_option("--k", fl_k, "Doubling bound K >= Dbl(A, B)")->required();
  fl_cmd->add_option("--step-coefficient", fl_step, "Experiment override of the 1/100 step")
      ->capture_default_str();
  fl_cmd->add_option("--out-a", fl_out_a, "Write the flattened A' as a set file");
  fl_cmd->add_option("--out-b", fl_out_b, "Write the flattened B' as a set file");
  fl_cmd->callback([&] {
    const PointSet a = read_set_file(fl_a);
    const PointSet b = read_set_file(fl_b);
    FlatteningOptions opts;
    opts.step_coefficient = fl_step;
    const FlatteningResult r = run_flattening(a, b, fl_k, opts);
    if (!fl_out_a.empty()) write_set_file(fl_out_a, r.a);
    if (!fl_out_b.empty()) write_set_file(fl_out_b, r.b);
    Json j{{"j", r.j},
           {"size_a", r.a.size()},
           {"size_b", r.b.size()},
           {"final_verdict", to_json(r.final_verdict, a.dimension())},
           {"bucket_audit", to_json(bucket_audit(r.trace, fl_k))},
           {"trace", to_json(r.trace, a.dimension())}};
    j["final_a"] = fl_out_a.empty() ? Json(nullptr) : Json(fl_out_a);
    j["final_b"] = fl_out_b.empty() ? Json(nullptr) : Json(fl_out_b);
    emit(j, format);
  });

  // theorem4 ---------------------------------------------------------------
  auto* th_cmd = app.add_subcommand("theorem4", "Subspace H and dense translates for A and B");
  std::string th_a, th_b, th_emit;
  double th_k = 0.0;
  th_cmd->add_option("a", th_a)->required();
  th_cmd->add_option("b", th_b)->required();
  th_cmd->add_option("--k", th_k, "Doubling bound K >= Dbl(A, B)")->required();
  th_cmd->add_option("--emit-h", th_emit, "Write the basis of H as a set file");
  th_cmd->callback([&] {
    const StructureResult r = theorem4_pipeline(read_set_file(th_a), read_set_file(th_b), th_k);
    if (!th_emit.empty()) {
      const auto basis = r.h.basis();
      write_set_file(th_emit, PointSet::from_elements(r.h.ambient_dimension(),
                                                      std::vector<Bits>(basis.begin(), basis.end())));
    }
    emit(to_json(r), format);
    if (r.status != PipelineStatus::verified) exit_code = kExitUnverified;
  });

  // generate ---------------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("generate", "Seeded instance generator");
  GeneratorSpec gs;
  std::string gen_kind = "subspace", gen_out_a, gen_out_b;
  bool gen_single = false;
  gen_cmd->add_option("--kind", gen_kind)
      ->check(CLI::IsMember({"subspace", "coset_union", "perturbed_subspace", "random_dense"}))
      ->capture_default_str();
  gen_cmd->add_option("--n", gs.n)->required();
  gen_cmd->add_option("--seed", gs.seed)->capture_default_str();
  gen_cmd->add_option("--dim", gs.dim, "Planted subspace dimension")->capture_default_str();
  gen_cmd->add_option("--cosets", gs.cosets)->capture_default_str();
  gen_cmd->add_option("--spread", gs.spread)->capture_default_str();
  gen_cmd->add_option("--add-fraction", gs.add_fraction)->capture_default_str();
  gen_cmd->add_option("--remove", gs.remove)->capture_default_str();
  gen_cmd->add_option("--density", gs.density)->capture_default_str();
  gen_cmd->add_flag("--single", gen_single, "Generate A only");
  gen_cmd->add_option("--out-a", gen_out_a, "Set file for A (default stdout)");
  gen_cmd->add_option("--out-b", gen_out_b, "Set file for B");
  gen_cmd->callback([&] {
    gs.kind = parse_generator_kind(gen_kind);
    gs.paired = !gen_single;
    const GeneratedInstance g = generate(gs);
    if (gen_out_a.empty()) {
      std::cout << format_set_text(g.a);
      return;
    }
    write_set_file(gen_out_a, g.a);
    if (g.b && !gen_out_b.empty()) write_set_file(gen_out_b, *g.b);
    Json j{{"kind", gen_kind}, {"n", gs.n}, {"seed", gs.seed}, {"size_a", g.a.size()}};
    j["size_b"] = g.b ? Json(g.b->size()) : Json(nullptr);
    j["planted"] = g.planted ? to_json(*g.planted) : Json(nullptr);
    emit(j, format);
  });

  // campaign ---------------------------------------------------------------
  auto* camp_cmd = app.add_subcommand("campaign", "Run an experiment campaign from a JSON config");
  std::string camp_config, camp_dir, camp_timings;
  camp_cmd->add_option("config", camp_config, "Campaign config (JSON)")->required();
  camp_cmd->add_option("--out-dir", camp_dir, "Directory for campaign.csv and campaign.json");
  camp_cmd->add_option("--timings", camp_timings, "Write per-trial wall times to this CSV");
  camp_cmd->callback([&] {
    const CampaignConfig cfg = parse_campaign_config(read_text(camp_config));
    const CampaignReport rep = run_campaign(cfg);
    const std::string csv = campaign_csv(rep);
    const std::string json = campaign_json(rep);
    if (!camp_dir.empty()) {
      std::filesystem::create_directories(camp_dir);
      write_text((std::filesystem::path(camp_dir) / "campaign.csv").string(), csv);
      write_text((std::filesystem::path(camp_dir) / "campaign.json").string(), json);
    }
    if (!camp_timings.empty()) write_text(camp_timings, campaign_timings_csv(rep));
    std::cout << (format == "csv" ? csv : json);
    // Captured trial errors outrank unverified constructions.
    for (const auto& row : rep.rows) {
      if (row.status == "ERROR") exit_code = kExitError;
      else if (row.status != "VERIFIED" && exit_code != kExitError) exit_code = kExitUnverified;
    }
  });

  // oracle-check -----------------------------------------------------------
  auto* or_cmd = app.add_subcommand("oracle-check", "Optimized paths against brute-force oracles");
  std::size_t or_trials = 500;
  std::uint64_t or_seed = 1;
  or_cmd->add_option("--trials", or_trials, "Trials per operation")->capture_default_str();
  or_cmd->add_option("--seed", or_seed)->capture_default_str();
  or_cmd->callback([&] {
    const OracleCheckReport r = run_oracle_check(or_trials, or_seed);
    emit(to_json(r), format);
    if (!r.ok()) exit_code = kExitError;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return exit_code;
}
