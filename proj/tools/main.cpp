#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hadscheme/actions.hpp"
#include "hadscheme/builder.hpp"
#include "hadscheme/catalogue.hpp"
#include "hadscheme/io.hpp"
#include "hadscheme/scheme_iso.hpp"
#include "hadscheme/version.hpp"

namespace hs = hadscheme;
using json = nlohmann::ordered_json;

namespace {

std::string hex64(std::uint64_t v) {
  char buf[19];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
  return buf;
}

json file_record(const std::string &path) {
  json j;
  j["path"] = path;
  j["fnv1a64"] = hex64(hs::fnv1a64(hs::read_file(path)));
  return j;
}

struct SchemeInput {
  std::string id;
  hs::AssociationScheme scheme;
};

std::string g_data_dir = "data";

// A scheme argument is a file path when one exists, otherwise a catalogue
// name like AS(4,2) or C8; AS(8,N) names resolve to as08_NN.scheme under
// the --data directory.
SchemeInput resolve_scheme(const std::string &spec, json &inputs,
                           const std::string &role) {
  if (std::filesystem::exists(spec)) {
    inputs[role] = file_record(spec);
    return {std::filesystem::path(spec).stem().string(),
            hs::read_scheme_file(spec)};
  }
  if (auto cat = hs::find_catalogue_scheme(spec)) {
    inputs[role] = json{{"catalogue", cat->id}};
    return {cat->id, cat->scheme};
  }
  std::string key;
  for (char c : spec)
    if (c != '(' && c != ')' && c != ',' && c != ' ')
      key.push_back((char)tolower(c));
  int row = 0;
  if (sscanf(key.c_str(), "as8%d", &row) == 1 ||
      sscanf(key.c_str(), "as08%d", &row) == 1) {
    if (row >= 1 && row <= 16) {
      char name[32];
      snprintf(name, sizeof name, "as08_%02d.scheme", row);
      std::string path = g_data_dir + "/" + name;
      std::string id = "AS(8," + std::to_string(row) + ")";
      if (std::filesystem::exists(path)) {
        inputs[role] = file_record(path);
        return {id, hs::read_scheme_file(path)};
      }
      throw hs::Error(hs::ErrorCode::BadInput,
                      id + " needs a catalogue file at " + path);
    }
  }
  throw hs::Error(hs::ErrorCode::BadInput,
                  "no file or catalogue scheme named '" + spec + "'");
}

// File path, or sylN for the doubling matrix of order N.
hs::HadamardMatrix resolve_hadamard(const std::string &spec, json &inputs,
                                    const std::string &role) {
  if (std::filesystem::exists(spec)) {
    inputs[role] = file_record(spec);
    return hs::read_hadamard_file(spec);
  }
  if (spec.rfind("syl", 0) == 0) {
    int order = atoi(spec.c_str() + 3);
    if (order >= 1 && (order & (order - 1)) == 0) {
      int k = 0;
      while ((1 << k) < order) ++k;
      inputs[role] = json{{"sylvester", order}};
      return hs::sylvester(k);
    }
  }
  throw hs::Error(hs::ErrorCode::BadInput,
                  "no file named '" + spec + "' (sylN also accepted)");
}

json valencies_json(const hs::AssociationScheme &s) {
  return json(s.valencies());
}

json orbit_json(const std::string &scheme_id, const hs::OrbitPartition &part) {
  json j;
  j["scheme_id"] = scheme_id;
  j["mode"] = part.mode == hs::OrbitMode::full ? "full" : "normalized";
  j["orbit_sizes"] = json(part.sizes_sorted_desc());
  j["k_orbits"] = part.orbit_count;
  j["similarity_classes"] = part.similarity_class_count;
  j["states_enumerated"] = part.states_enumerated;
  j["class_size"] = part.class_size;
  return j;
}

json bound_json(const hs::BoundResult &b) {
  json j;
  j["numerator"] = b.numerator;
  j["denominator"] = b.denominator;
  j["ceiling"] = b.ceiling;
  j["approx"] = b.approx;
  return j;
}

hs::OrbitOptions orbit_options(const std::string &mode, int n, int threads) {
  hs::OrbitOptions opt;
  opt.threads = threads;
  if (mode == "full")
    opt.mode = hs::OrbitMode::full;
  else if (mode == "normalized")
    opt.mode = hs::OrbitMode::normalized;
  else
    opt.mode = n <= 4 ? hs::OrbitMode::full : hs::OrbitMode::normalized;
  return opt;
}

// Table rows of the order-8 run: the sixteen catalogue schemes by number,
// then the five thin group schemes.
const std::vector<std::string> kOrder8Rows = {
    "AS(8,1)",  "AS(8,2)",  "AS(8,3)",  "AS(8,4)",  "AS(8,5)",  "AS(8,6)",
    "AS(8,7)",  "AS(8,8)",  "AS(8,9)",  "AS(8,10)", "AS(8,11)", "AS(8,12)",
    "AS(8,13)", "AS(8,14)", "AS(8,15)", "AS(8,16)", "C2xC2xC2", "D4",
    "C4xC2",    "Q8",       "C8"};

SchemeInput resolve_order8_row(int row, const std::string &data_dir,
                               json &inputs) {
  const std::string &id = kOrder8Rows[row - 1];
  if (auto cat = hs::find_catalogue_scheme(id)) {
    inputs[id] = json{{"catalogue", cat->id}};
    return {cat->id, cat->scheme};
  }
  char name[32];
  snprintf(name, sizeof name, "as08_%02d.scheme", row);
  std::string path = data_dir + "/" + name;
  if (std::filesystem::exists(path)) {
    inputs[id] = file_record(path);
    return {id, hs::read_scheme_file(path)};
  }
  throw hs::Error(hs::ErrorCode::BadInput,
                  "row " + std::to_string(row) + " (" + id +
                      ") needs a catalogue file at " + path);
}

int exit_code_for(hs::ErrorCode c) {
  switch (c) {
  case hs::ErrorCode::NotAPartition:
  case hs::ErrorCode::BadIdentity:
  case hs::ErrorCode::NotClosedUnderTranspose:
  case hs::ErrorCode::NonConstantIntersection:
  case hs::ErrorCode::NotAGroup:
  case hs::ErrorCode::NotOrthogonal:
  case hs::ErrorCode::DistanceMismatch:
    return 3;
  default:
    return 2;
  }
}

} // namespace

int main(int argc, char **argv) {
  auto start = std::chrono::steady_clock::now();

  CLI::App app{"association schemes built from Hadamard matrices"};
  app.set_version_flag("--version", HADSCHEME_VERSION_STRING);
  app.require_subcommand(1);
  app.fallthrough();

  int seed = 0;
  bool pretty = false;
  app.add_option("--seed", seed, "seed for randomized choices")
      ->capture_default_str();
  app.add_flag("--pretty", pretty, "indent the report");
  app.add_option("--data", g_data_dir, "catalogue file directory")
      ->capture_default_str();

  json inputs = json::object();
  json outputs = json::object();
  int verdict = 0; // raised to 3 by failed checks

  // scheme verify|aut|iso
  auto *cmd_scheme = app.add_subcommand("scheme", "scheme file operations");
  std::string scheme_file;
  auto *cmd_sverify = cmd_scheme->add_subcommand("verify", "check the axioms");
  cmd_sverify->add_option("file", scheme_file, "scheme file")->required();
  cmd_sverify->callback([&] {
    auto in = resolve_scheme(scheme_file, inputs, "scheme");
    const auto &s = in.scheme;
    outputs["n"] = s.n;
    outputs["rank"] = s.r;
    outputs["valencies"] = valencies_json(s);
    bool symmetric = true;
    for (int t = 0; t < s.r; ++t) symmetric &= s.star[t] == t;
    outputs["symmetric"] = symmetric;
    int nonzero = 0;
    for (int v : s.tensor) nonzero += v != 0;
    outputs["tensor_nonzero"] = nonzero;
    std::string bytes((const char *)s.tensor.data(),
                      s.tensor.size() * sizeof(int));
    outputs["tensor_fnv1a64"] = hex64(hs::fnv1a64(bytes));
  });
  auto *cmd_saut = cmd_scheme->add_subcommand("aut", "automorphism group order");
  cmd_saut->add_option("file", scheme_file, "scheme file")->required();
  cmd_saut->callback([&] {
    auto in = resolve_scheme(scheme_file, inputs, "scheme");
    outputs["n"] = in.scheme.n;
    outputs["order"] = hs::aut_group(in.scheme).order();
  });
  auto *cmd_siso = cmd_scheme->add_subcommand(
      "iso", "order of the group of relation-permuting point maps");
  cmd_siso->add_option("file", scheme_file, "scheme file")->required();
  cmd_siso->callback([&] {
    auto in = resolve_scheme(scheme_file, inputs, "scheme");
    outputs["n"] = in.scheme.n;
    outputs["order"] = hs::iso_group(in.scheme).order();
  });

  // hadamard gen|verify|aut|equiv
  auto *cmd_had = app.add_subcommand("hadamard", "Hadamard matrix operations");
  std::string had_file, had_file2, out_file;
  int syl_k = 0, fix_point = 0;
  auto *cmd_hgen = cmd_had->add_subcommand("gen", "generate a matrix");
  auto *cmd_hgen_syl =
      cmd_hgen->add_subcommand("sylvester", "doubling construction 2^k");
  cmd_hgen_syl->add_option("k", syl_k, "doubling count")->required();
  cmd_hgen_syl->add_option("-o,--output", out_file, "output file")->required();
  cmd_hgen_syl->callback([&] {
    auto h = hs::sylvester(syl_k);
    hs::write_hadamard_file(out_file, h);
    outputs["n"] = h.n;
    outputs["file"] = out_file;
    outputs["fnv1a64"] = hex64(hs::fnv1a64(hs::read_file(out_file)));
  });
  auto *cmd_hverify = cmd_had->add_subcommand("verify", "check orthogonality");
  cmd_hverify->add_option("file", had_file, "matrix file")->required();
  cmd_hverify->callback([&] {
    auto h = resolve_hadamard(had_file, inputs, "hadamard");
    outputs["n"] = h.n;
    outputs["ok"] = true;
  });
  auto *cmd_haut = cmd_had->add_subcommand(
      "aut", "order of the point-fixing automorphism pair group");
  cmd_haut->add_option("file", had_file, "matrix file")->required();
  cmd_haut->add_option("--fix", fix_point, "fixed row/column index")
      ->capture_default_str();
  cmd_haut->callback([&] {
    auto h = resolve_hadamard(had_file, inputs, "hadamard");
    if (fix_point < 0 || fix_point >= h.n)
      throw hs::Error(hs::ErrorCode::BadInput, "--fix out of range");
    outputs["n"] = h.n;
    outputs["fix"] = fix_point;
    outputs["order"] = hs::aut_pairs_fixing(h, fix_point).order();
  });
  auto *cmd_hequiv =
      cmd_had->add_subcommand("equiv", "signed-permutation equivalence");
  cmd_hequiv->add_option("first", had_file, "matrix file")->required();
  cmd_hequiv->add_option("second", had_file2, "matrix file")->required();
  cmd_hequiv->callback([&] {
    auto a = resolve_hadamard(had_file, inputs, "first");
    auto b = resolve_hadamard(had_file2, inputs, "second");
    outputs["equivalent"] = hs::equivalence_check(a, b);
  });

  // build sh
  std::string scheme_spec, had_spec;
  auto *cmd_build = app.add_subcommand("build", "construct derived schemes");
  auto *cmd_build_sh = cmd_build->add_subcommand(
      "sh", "4n-point scheme from a base scheme and a matrix");
  cmd_build_sh->add_option("--scheme", scheme_spec, "base scheme")->required();
  cmd_build_sh->add_option("--hadamard", had_spec, "matrix")->required();
  cmd_build_sh->add_option("-o,--output", out_file, "output scheme file");
  cmd_build_sh->callback([&] {
    auto base = resolve_scheme(scheme_spec, inputs, "scheme");
    auto h = resolve_hadamard(had_spec, inputs, "hadamard");
    auto cover = hs::build_cover_scheme(base.scheme, h);
    outputs["n"] = cover.scheme.n;
    outputs["rank"] = cover.scheme.r;
    outputs["valencies"] = valencies_json(cover.scheme);
    bool fission = hs::fission_check(cover);
    outputs["fission"] = fission;
    auto maps = hs::standard_isomorphisms_check(base.scheme, h);
    outputs["maps"] = json{{"transpose", maps.transpose_map},
                           {"row_negations", maps.row_negation_maps},
                           {"col_negations", maps.col_negation_maps},
                           {"negate_rows", maps.negate_rows_map},
                           {"negate_cols", maps.negate_cols_map}};
    if (!out_file.empty()) {
      hs::write_cover_scheme_file(out_file, cover);
      outputs["file"] = out_file;
    }
    if (!fission || !maps.all()) verdict = 3;
  });

  // orbits
  std::string mode = "auto";
  int threads = 1;
  auto *cmd_orbits =
      app.add_subcommand("orbits", "orbit partition of one equivalence class");
  cmd_orbits->add_option("--scheme", scheme_spec, "base scheme")->required();
  cmd_orbits->add_option("--hadamard", had_spec, "class representative")
      ->required();
  cmd_orbits->add_option("--mode", mode, "full|normalized")
      ->check(CLI::IsMember({"auto", "full", "normalized"}))
      ->capture_default_str();
  cmd_orbits->add_option("--threads", threads, "worker threads")
      ->capture_default_str();
  cmd_orbits->callback([&] {
    auto base = resolve_scheme(scheme_spec, inputs, "scheme");
    auto h = resolve_hadamard(had_spec, inputs, "hadamard");
    auto part = hs::similarity_orbits(base.scheme, h,
                                      orbit_options(mode, h.n, threads));
    outputs = orbit_json(base.id, part);
  });

  // similar
  auto *cmd_similar =
      app.add_subcommand("similar", "similarity of two matrices over a scheme");
  cmd_similar->add_option("--scheme", scheme_spec, "base scheme")->required();
  cmd_similar->add_option("first", had_file, "matrix file")->required();
  cmd_similar->add_option("second", had_file2, "matrix file")->required();
  cmd_similar->callback([&] {
    auto base = resolve_scheme(scheme_spec, inputs, "scheme");
    auto a = resolve_hadamard(had_file, inputs, "first");
    auto b = resolve_hadamard(had_file2, inputs, "second");
    outputs["scheme_id"] = base.id;
    outputs["similar"] = hs::similar_check(a, b, base.scheme);
  });

  // bound
  std::string bound_word;
  int bound_k = 0;
  auto *cmd_bound =
      app.add_subcommand("bound", "lower bound on similarity classes");
  cmd_bound->add_option("--scheme", scheme_spec, "base scheme");
  cmd_bound->add_option("--hadamard", had_spec, "matrix");
  cmd_bound->add_option("word", bound_word, "'sylvester' for the closed form");
  cmd_bound->add_option("k", bound_k, "doubling count");
  cmd_bound->callback([&] {
    if (bound_word == "sylvester") {
      auto b = hs::sylvester_class_lower_bound(bound_k);
      outputs["k"] = bound_k;
      outputs["n"] = 1 << bound_k;
      outputs.update(bound_json(b));
      return;
    }
    if (!bound_word.empty())
      throw hs::Error(hs::ErrorCode::BadInput,
                      "unknown form '" + bound_word + "'");
    if (scheme_spec.empty() || had_spec.empty())
      throw hs::Error(hs::ErrorCode::BadInput,
                      "need --scheme and --hadamard, or 'sylvester K'");
    auto base = resolve_scheme(scheme_spec, inputs, "scheme");
    auto h = resolve_hadamard(had_spec, inputs, "hadamard");
    auto aut = hs::aut_group(base.scheme).order();
    auto iso = hs::iso_group(base.scheme).order();
    auto aut_fix = hs::aut_pairs_fixing(h, 0).order();
    outputs["scheme_id"] = base.id;
    outputs["n"] = h.n;
    outputs["aut"] = aut;
    outputs["iso"] = iso;
    outputs["aut_fix"] = aut_fix;
    outputs.update(bound_json(
        hs::class_count_lower_bound(h.n, aut_fix, aut, iso)));
  });

  // reproduce table2|table3
  std::string rows_arg;
  auto *cmd_repro = app.add_subcommand("reproduce", "published table runs");
  auto *cmd_t2 = cmd_repro->add_subcommand(
      "table2", "all four order-4 base schemes end to end");
  cmd_t2->add_option("--threads", threads, "worker threads")
      ->capture_default_str();
  cmd_t2->callback([&] {
    auto h0 = hs::order4_hadamards()[0];
    inputs["hadamard"] = json{{"order4", hex64(h0.packed())}};
    auto aut_fix = hs::aut_pairs_fixing(h0, 0).order();
    json rows = json::array();
    for (const auto &cs : hs::order4_schemes()) {
      hs::OrbitOptions opt;
      opt.mode = hs::OrbitMode::full;
      opt.threads = threads;
      auto part = hs::similarity_orbits(cs.scheme, h0, opt);
      auto aut = hs::aut_group(cs.scheme).order();
      auto iso = hs::iso_group(cs.scheme).order();
      json row;
      row["scheme"] = cs.id;
      row["aut"] = aut;
      row["iso"] = iso;
      row["k_orbit_sizes"] = json(part.sizes_sorted_desc());
      row["k_orbits"] = part.orbit_count;
      row["similarity_classes"] = part.similarity_class_count;
      row["class_size"] = part.class_size;
      row["bound"] =
          bound_json(hs::class_count_lower_bound(4, aut_fix, aut, iso));
      rows.push_back(row);
    }
    outputs["aut_fix"] = aut_fix;
    outputs["rows"] = rows;
  });
  auto *cmd_t3 = cmd_repro->add_subcommand(
      "table3", "selected order-8 rows against the doubling matrix");
  cmd_t3->add_option("--rows", rows_arg, "comma list of 1..21 or row names")
      ->required();
  cmd_t3->add_option("--threads", threads, "worker threads")
      ->capture_default_str();
  cmd_t3->callback([&] {
    std::vector<int> picked;
    std::stringstream ss(rows_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      bool digits = tok.find_first_not_of("0123456789") == std::string::npos;
      if (digits) {
        int row = atoi(tok.c_str());
        if (row < 1 || row > (int)kOrder8Rows.size())
          throw hs::Error(hs::ErrorCode::BadInput, "row " + tok +
                              " out of 1.." +
                              std::to_string(kOrder8Rows.size()));
        picked.push_back(row);
        continue;
      }
      int found = 0;
      for (int i = 0; i < (int)kOrder8Rows.size(); ++i) {
        auto squash = [](const std::string &s) {
          std::string t;
          for (char c : s)
            if (isalnum((unsigned char)c)) t.push_back((char)tolower(c));
          return t;
        };
        if (squash(kOrder8Rows[i]) == squash(tok)) found = i + 1;
      }
      if (!found)
        throw hs::Error(hs::ErrorCode::BadInput, "unknown row '" + tok + "'");
      picked.push_back(found);
    }
    if (picked.empty())
      throw hs::Error(hs::ErrorCode::BadInput, "--rows selected nothing");

    auto h = hs::sylvester(3);
    inputs["hadamard"] = json{{"sylvester", 8}};
    auto aut_fix = hs::aut_pairs_fixing(h, 0).order();
    json rows = json::array();
    for (int rw : picked) {
      auto in = resolve_order8_row(rw, g_data_dir, inputs);
      hs::OrbitOptions opt;
      opt.mode = hs::OrbitMode::normalized;
      opt.threads = threads;
      auto part = hs::similarity_orbits(in.scheme, h, opt);
      auto aut = hs::aut_group(in.scheme).order();
      auto iso = hs::iso_group(in.scheme).order();
      json row;
      row["row"] = rw;
      row["scheme"] = in.id;
      row["aut"] = aut;
      row["iso"] = iso;
      row["k_orbits"] = part.orbit_count;
      row["similarity_classes"] = part.similarity_class_count;
      row["bound"] =
          bound_json(hs::class_count_lower_bound(8, aut_fix, aut, iso));
      rows.push_back(row);
    }
    outputs["aut_fix"] = aut_fix;
    outputs["rows"] = rows;
  });

  int code = 0;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help, --version
    app.exit(e);
    return 2;
  } catch (const hs::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    outputs = json{{"error", e.what()}};
    code = exit_code_for(e.code);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    outputs = json{{"error", e.what()}};
    code = 2;
  }
  if (code == 0) code = verdict;

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::ostringstream cmdline;
  for (int i = 1; i < argc; ++i) cmdline << (i > 1 ? " " : "") << argv[i];

  json report;
  report["command"] = cmdline.str();
  report["seed"] = seed;
  report["inputs"] = inputs;
  report["outputs"] = outputs;
  report["wall_time_ms"] = ms;
  report["version"] = HADSCHEME_VERSION_STRING;
  std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
  return code;
}
