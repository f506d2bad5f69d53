#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hfq/builders.hpp"
#include "hfq/covering.hpp"
#include "hfq/grading.hpp"
#include "hfq/json_io.hpp"
#include "hfq/lens_oracle.hpp"
#include "hfq/spinc.hpp"
#include "hfq/validate.hpp"

namespace hfq::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_parameters, "cannot write '" + path + "'");
  out << content;
}

inline Diagram load_diagram(const std::string& path) {
  return diagram_from_text(read_file(path));
}

inline Diagram load_valid_diagram(const std::string& path) {
  Diagram d = load_diagram(path);
  ValidationReport rep = validate(d);
  if (!rep.ok())
    throw Error(Errc::invalid_diagram, "'" + path + "' fails validation (" +
                                           rep.violations.front().code + " at " +
                                           rep.violations.front().location + ")");
  return d;
}

// Selectors: g<k> by enumeration index; x<i> names the one-vertex generator
// {i} on diagrams with a single curve per family (lens diagrams).
inline Generator resolve_generator(const Diagram& d, const std::vector<Generator>& gens,
                                   const std::string& sel) {
  auto parse_index = [&](char prefix) -> std::optional<int> {
    if (sel.size() < 2 || sel[0] != prefix) return std::nullopt;
    try {
      size_t used = 0;
      int k = std::stoi(sel.substr(1), &used);
      if (used != sel.size() - 1 || k < 0) return std::nullopt;
      return k;
    } catch (...) {
      return std::nullopt;
    }
  };
  if (auto k = parse_index('g')) {
    if (*k >= static_cast<int>(gens.size()))
      throw Error(Errc::invalid_parameters,
                  "generator " + sel + " out of range (have " + std::to_string(gens.size()) + ")");
    return gens[*k];
  }
  if (auto i = parse_index('x')) {
    if (d.generator_rank() != 1)
      throw Error(Errc::invalid_parameters,
                  "x<i> selectors need a single alpha/beta curve; use g<k>");
    if (*i >= d.num_vertices())
      throw Error(Errc::invalid_parameters, "vertex " + sel + " out of range");
    return Generator{*i};
  }
  throw Error(Errc::invalid_parameters, "bad generator selector '" + sel + "' (use g<k> or x<i>)");
}

inline void print_report_text(const ValidationReport& rep, std::ostream& out) {
  if (rep.ok()) {
    out << "valid\n";
    return;
  }
  out << "invalid (" << rep.violations.size() << " violations)\n";
  for (const Violation& v : rep.violations)
    out << "  " << v.code << " @ " << v.location << ": " << v.detail << "\n";
}

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error: return 2;
    default: return 1;
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative Z- and Q-gradings of multi-pointed Heegaard diagrams"};
  app.require_subcommand(1);

  std::string file, file2, spec_path, out_path;
  std::vector<std::string> pair;
  std::vector<std::string> auto_pair;
  long lens_p = 0, lens_q = 0;
  int merge_i = 0, merge_j = 0;
  long limit = -1;
  bool as_json = false, with_oracle = false;

  CLI::App* c_validate = app.add_subcommand("validate", "check every diagram invariant");
  c_validate->add_option("file", file)->required();
  c_validate->add_flag("--json", as_json);

  CLI::App* c_gens = app.add_subcommand("generators", "enumerate generators");
  c_gens->add_option("file", file)->required();
  c_gens->add_option("--limit", limit);
  c_gens->add_flag("--json", as_json);

  CLI::App* c_spinc = app.add_subcommand("spinc", "Spin^c classes, torsion flags and orders");
  c_spinc->add_option("file", file)->required();
  c_spinc->add_flag("--json", as_json);

  CLI::App* c_grade = app.add_subcommand("grade", "grading table or a single Gr value");
  c_grade->add_option("file", file)->required();
  c_grade->add_option("--pair", pair)->expected(2);
  c_grade->add_flag("--json", as_json);

  CLI::App* c_lens = app.add_subcommand("lens", "build the -L(p,q) diagram");
  c_lens->add_option("p", lens_p)->required();
  c_lens->add_option("q", lens_q)->required();
  c_lens->add_option("--out", out_path);
  c_lens->add_flag("--oracle", with_oracle);
  c_lens->add_flag("--json", as_json);

  CLI::App* c_cover = app.add_subcommand("cover", "build or verify a cyclic covering diagram");
  c_cover->add_option("file", file)->required();
  c_cover->add_option("--auto", auto_pair)->expected(2);
  c_cover->add_option("--spec", spec_path);
  c_cover->add_option("--pair", pair)->expected(2);
  c_cover->add_option("--out", out_path);
  c_cover->add_flag("--json", as_json);

  CLI::App* c_sum = app.add_subcommand("sum", "connected sum of two one-pointed diagrams");
  c_sum->add_option("file1", file)->required();
  c_sum->add_option("file2", file2)->required();
  c_sum->add_option("--out", out_path);

  CLI::App* c_merge = app.add_subcommand("merge", "merge two basepoints along a tube");
  c_merge->add_option("file", file)->required();
  c_merge->add_option("i", merge_i)->required();
  c_merge->add_option("j", merge_j)->required();
  c_merge->add_option("--out", out_path);

  std::vector<const char*> argv;
  argv.push_back("hfq");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_validate->parsed()) {
      Diagram d = detail::load_diagram(file);
      ValidationReport rep = validate(d);
      if (as_json)
        out << validation_report_to_json(rep).dump(2) << "\n";
      else
        detail::print_report_text(rep, out);
      return rep.ok() ? 0 : 1;
    }

    if (c_gens->parsed()) {
      Diagram d = detail::load_valid_diagram(file);
      GeneratorList gl = enumerate_generators(
          d, limit >= 0 ? std::optional<size_t>(static_cast<size_t>(limit)) : std::nullopt);
      if (as_json) {
        json j;
        j["schema"] = kSchemaTag;
        j["generators"] = gl.generators;
        j["truncated"] = gl.truncated;
        out << j.dump(2) << "\n";
      } else {
        for (size_t k = 0; k < gl.generators.size(); ++k)
          out << generator_name(static_cast<int>(k)) << " = "
              << generator_vertices(gl.generators[k]) << "\n";
        if (gl.truncated) out << "(limit reached before exhaustion)\n";
      }
      return 0;
    }

    if (c_spinc->parsed()) {
      Diagram d = detail::load_valid_diagram(file);
      SpincPartition part = spinc_partition(d);
      if (as_json) {
        json j;
        j["schema"] = kSchemaTag;
        j["generators"] = part.generators;
        json classes = json::array();
        for (size_t c = 0; c < part.classes.size(); ++c)
          classes.push_back(
              {{"members", part.classes[c]}, {"torsion", bool(part.class_torsion[c])}});
        j["classes"] = std::move(classes);
        json orders = json::array();
        for (const auto& row : part.class_pair_order) {
          json jrow = json::array();
          for (const auto& n : row) jrow.push_back(n ? json(to_string(*n)) : json(nullptr));
          orders.push_back(std::move(jrow));
        }
        j["class_torsion_orders"] = std::move(orders);
        out << j.dump(2) << "\n";
      } else {
        out << "spinc classes: " << part.classes.size() << "\n";
        for (size_t c = 0; c < part.classes.size(); ++c) {
          out << "  class " << c << (part.class_torsion[c] ? " (torsion):" : " (non-torsion):");
          for (int g : part.classes[c]) out << " " << generator_name(g);
          out << "\n";
        }
        for (size_t a = 0; a < part.classes.size(); ++a)
          for (size_t b = a + 1; b < part.classes.size(); ++b) {
            const auto& n = part.class_pair_order[a][b];
            out << "  order(" << a << "," << b << ") = " << (n ? to_string(*n) : "infinite")
                << "\n";
          }
      }
      return 0;
    }

    if (c_grade->parsed()) {
      Diagram d = detail::load_valid_diagram(file);
      GradingTable table = grading_table(d);
      if (!pair.empty()) {
        Generator a = detail::resolve_generator(d, table.partition.generators, pair[0]);
        Generator b = detail::resolve_generator(d, table.partition.generators, pair[1]);
        int ia = -1, ib = -1;
        for (size_t g = 0; g < table.partition.generators.size(); ++g) {
          if (table.partition.generators[g] == a) ia = static_cast<int>(g);
          if (table.partition.generators[g] == b) ib = static_cast<int>(g);
        }
        auto v = table.q_grading(ia, ib);
        std::string text = v ? to_string(*v) : "non-torsion";
        if (as_json) {
          json j;
          j["schema"] = kSchemaTag;
          j["Gr"] = v ? json(text) : json(nullptr);
          out << j.dump(2) << "\n";
        } else {
          out << text << "\n";
        }
        return 0;
      }
      if (as_json)
        out << grading_table_to_json(table).dump(2) << "\n";
      else
        out << to_text(table);
      return 0;
    }

    if (c_lens->parsed()) {
      Diagram d = lens_diagram(static_cast<int>(lens_p), static_cast<int>(lens_q));
      std::string text = diagram_to_json(d).dump(2) + "\n";
      if (!out_path.empty()) {
        detail::write_file(out_path, text);
        out << "wrote " << out_path << " (" << d.num_vertices() << " generators)\n";
      } else if (!with_oracle) {
        out << text;
      }
      if (with_oracle) {
        const std::vector<Rational>& abs = lens_absolute_grading(lens_p, lens_q);
        if (as_json) {
          json j;
          j["schema"] = kSchemaTag;
          json tgr = json::array();
          for (const Rational& v : abs) tgr.push_back(to_string(v));
          j["tgr"] = std::move(tgr);
          LensComparisonReport rep = compare_lens_gradings(lens_p, lens_q);
          j["pairs_checked"] = rep.pairs_checked;
          j["verdict"] = rep.agree() ? "AGREE" : "DISAGREE";
          j["discrepancies"] = rep.discrepancies;
          out << j.dump(2) << "\n";
          return rep.agree() ? 0 : 1;
        }
        out << "absolute gradings (base S^3 = 0):\n";
        for (size_t i = 0; i < abs.size(); ++i)
          out << "  x" << i << ": " << to_string(abs[i]) << "\n";
        LensComparisonReport rep = compare_lens_gradings(lens_p, lens_q);
        for (const std::string& s : rep.discrepancies) out << "  discrepancy: " << s << "\n";
        out << (rep.agree() ? "AGREE" : "DISAGREE") << " (" << rep.pairs_checked << " pairs)\n";
        return rep.agree() ? 0 : 1;
      }
      return 0;
    }

    if (c_cover->parsed()) {
      Diagram d = detail::load_valid_diagram(file);
      if (!auto_pair.empty() && !spec_path.empty())
        throw Error(Errc::invalid_parameters, "--auto and --spec are mutually exclusive");
      std::vector<Generator> gens = enumerate_generators(d).generators;
      CoveringSpec spec;
      std::optional<std::pair<Generator, Generator>> check_pair;
      if (!auto_pair.empty()) {
        Generator a = detail::resolve_generator(d, gens, auto_pair[0]);
        Generator b = detail::resolve_generator(d, gens, auto_pair[1]);
        spec = find_trivializing_cocycle(d, a, b);
        check_pair = {a, b};
      } else if (!spec_path.empty()) {
        spec = covering_spec_from_text(detail::read_file(spec_path), d);
        ValidationReport rep = validate_cocycle(d, spec);
        if (!rep.ok()) {
          detail::print_report_text(rep, out);
          return 1;
        }
        if (!pair.empty())
          check_pair = {detail::resolve_generator(d, gens, pair[0]),
                        detail::resolve_generator(d, gens, pair[1])};
      } else {
        throw Error(Errc::invalid_parameters, "cover needs --auto x y or --spec file");
      }

      CoverResult cover = build_cover(d, spec);
      if (!out_path.empty())
        detail::write_file(out_path, diagram_to_json(cover.cover).dump(2) + "\n");
      json jout;
      jout["schema"] = kSchemaTag;
      jout["n"] = spec.n;
      jout["cocycle"] = covering_spec_to_json(spec)["cocycle"];
      jout["cover"] = {{"genus", cover.cover.genus()},
                       {"basepoints", cover.cover.num_basepoints()},
                       {"vertices", cover.cover.num_vertices()}};
      if (!as_json) {
        out << "n = " << spec.n << ", cocycle = " << jout["cocycle"].dump() << "\n";
        out << "cover: genus " << cover.cover.genus() << ", " << cover.cover.num_basepoints()
            << " basepoints, " << cover.cover.num_vertices() << " vertices\n";
      }
      int rc = 0;
      if (check_pair) {
        ScalingCheck check = verify_scaling(d, spec, check_pair->first, check_pair->second);
        jout["downstairs"] = to_string(check.downstairs);
        jout["upstairs"] = to_string(check.upstairs);
        jout["lifts_equivalent"] = check.lifts_equivalent;
        jout["pass"] = check.pass;
        if (!as_json) {
          out << "downstairs Gr = " << to_string(check.downstairs) << ", upstairs "
              << (check.lifts_equivalent ? "gr" : "Gr") << " = " << to_string(check.upstairs)
              << ", n = " << check.n << "\n";
          out << (check.pass ? "PASS" : "FAIL") << "\n";
        }
        rc = check.pass ? 0 : 1;
      }
      if (as_json) out << jout.dump(2) << "\n";
      return rc;
    }

    if (c_sum->parsed()) {
      Diagram d1 = detail::load_valid_diagram(file);
      Diagram d2 = detail::load_valid_diagram(file2);
      Diagram s = connected_sum(d1, d2);
      std::string text = diagram_to_json(s).dump(2) + "\n";
      if (!out_path.empty()) {
        detail::write_file(out_path, text);
        out << "wrote " << out_path << " (genus " << s.genus() << ")\n";
      } else {
        out << text;
      }
      return 0;
    }

    if (c_merge->parsed()) {
      Diagram d = detail::load_valid_diagram(file);
      Diagram m = merge_basepoints(d, merge_i, merge_j);
      std::string text = diagram_to_json(m).dump(2) + "\n";
      if (!out_path.empty()) {
        detail::write_file(out_path, text);
        out << "wrote " << out_path << " (genus " << m.genus() << ", "
            << m.num_basepoints() << " basepoints)\n";
      } else {
        out << text;
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hfq::cli
