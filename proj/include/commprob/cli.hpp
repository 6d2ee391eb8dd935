#ifndef COMMPROB_CLI_HPP_
#define COMMPROB_CLI_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bignum.hpp"
#include "branching.hpp"
#include "conjugacy.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "psi.hpp"
#include "spec.hpp"

namespace commprob::cli {

  using json = nlohmann::ordered_json;

  //! Process exit codes.
  enum ExitCode : int { exit_pass = 0, exit_check_failed = 1, exit_usage = 2 };

  enum class Format { csv, json };

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(Errc::parse_error, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline GroupSpec load_spec(std::string const& path) {
    return parse_group_spec(read_file(path));
  }

  // ---------------------------------------------------------------------
  // branching matrix serialization
  // ---------------------------------------------------------------------

  inline json branching_to_json(std::string const&     name,
                                BranchingResult const& R,
                                StructureReport const& report) {
    auto const& B = R.matrix;
    json        types = json::array();
    for (std::size_t i = 0; i < B.size(); ++i) {
      auto const& t = R.registry[B.labels()[i]];
      types.push_back({{"id", B.labels()[i] + 1},
                       {"tuple", t.tuple},
                       {"tuple_length", t.depth},
                       {"centralizer_order", t.centralizer.order()},
                       {"abelian", t.abelian}});
    }
    json checks = json::array();
    for (auto const& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return json{{"group", name},
                {"order", R.registry.group().order()},
                {"size", B.size()},
                {"types", types},
                {"matrix", B.rows()},
                {"checks", checks}};
  }

  //! Inverse of branching_to_json for the matrix part.
  inline BranchingMatrixInt branching_from_json(std::string const& text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw Error(Errc::parse_error, e.what());
    }
    if (!doc.contains("matrix") || !doc.contains("types")) {
      throw Error(Errc::validation_error, "branching document needs matrix and types");
    }
    auto rows = doc["matrix"].get<std::vector<std::vector<std::uint64_t>>>();
    std::vector<TypeId> labels;
    for (auto const& t : doc["types"]) {
      labels.push_back(t.at("id").get<TypeId>() - 1);
    }
    if (labels.size() != rows.size()) {
      throw Error(Errc::validation_error, "types and matrix sizes differ");
    }
    BranchingMatrixInt B(labels);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw Error(Errc::validation_error, "matrix is not square");
      }
      for (std::size_t j = 0; j < rows.size(); ++j) {
        B(i, j) = rows[i][j];
      }
    }
    return B;
  }

  inline std::string branching_to_csv(BranchingResult const& R) {
    auto const&        B = R.matrix;
    std::ostringstream out;
    out << "type,tuple_length,centralizer_order,abelian";
    for (std::size_t j = 0; j < B.size(); ++j) {
      out << ",T" << B.labels()[j] + 1;
    }
    out << "\n";
    for (std::size_t i = 0; i < B.size(); ++i) {
      auto const& t = R.registry[B.labels()[i]];
      out << "T" << B.labels()[i] + 1 << "," << t.depth << "," << t.centralizer.order() << ","
          << (t.abelian ? 1 : 0);
      for (std::size_t j = 0; j < B.size(); ++j) {
        out << "," << B(i, j);
      }
      out << "\n";
    }
    return out.str();
  }

  // ---------------------------------------------------------------------
  // subcommands; each writes its report to out and returns an exit code
  // ---------------------------------------------------------------------

  inline int run_classes(GroupSpec const& spec, Format fmt, std::ostream& out) {
    FiniteGroup G   = build_group(spec);
    Subgroup    all = Subgroup::whole(G);
    auto        P   = conjugacy_classes(all);
    auto        Z   = z_classes(all, P);
    std::vector<std::size_t> z_of(P.size());
    for (std::size_t z = 0; z < Z.size(); ++z) {
      for (auto c : Z[z].member_classes) {
        z_of[c] = z;
      }
    }
    bool ok = true;
    for (auto const& c : P.classes) {
      ok = ok && G.order() % c.members.size() == 0;
    }
    for (auto const& z : Z) {
      for (auto c : z.member_classes) {
        ok = ok && P.classes[c].members.size() == P.classes[z.member_classes[0]].members.size();
      }
    }
    if (fmt == Format::json) {
      json classes = json::array();
      for (std::size_t c = 0; c < P.size(); ++c) {
        ElementIndex x = P.classes[c].representative;
        classes.push_back({{"class", c + 1},
                           {"representative", x},
                           {"element", format_element(G.element(x))},
                           {"size", P.classes[c].members.size()},
                           {"centralizer_order", G.order() / P.classes[c].members.size()},
                           {"z_class", z_of[c] + 1}});
      }
      json zs = json::array();
      for (std::size_t z = 0; z < Z.size(); ++z) {
        std::vector<std::size_t> ids;
        for (auto c : Z[z].member_classes) {
          ids.push_back(c + 1);
        }
        zs.push_back({{"z_class", z + 1},
                      {"classes", ids},
                      {"centralizer_order", Z[z].centralizer.order()}});
      }
      out << json{{"group", spec.name},
                  {"order", G.order()},
                  {"classes", classes},
                  {"z_classes", zs},
                  {"checks_passed", ok}}
                 .dump(2)
          << "\n";
    } else {
      out << "class,representative,element,size,centralizer_order,z_class\n";
      for (std::size_t c = 0; c < P.size(); ++c) {
        ElementIndex x = P.classes[c].representative;
        out << c + 1 << "," << x << "," << format_element(G.element(x)) << ","
            << P.classes[c].members.size() << "," << G.order() / P.classes[c].members.size()
            << "," << z_of[c] + 1 << "\n";
      }
      out << "# order: " << G.order() << "\n";
      out << "# classes: " << P.size() << "\n";
      out << "# z_classes: " << Z.size() << "\n";
    }
    return ok ? exit_pass : exit_check_failed;
  }

  inline int run_branching(GroupSpec const& spec, Format fmt, std::ostream& out) {
    FiniteGroup G      = build_group(spec);
    auto        R      = branching_matrix(G);
    auto        report = verify_structure(R.matrix, R.registry);
    if (fmt == Format::json) {
      out << branching_to_json(spec.name, R, report).dump(2) << "\n";
    } else {
      out << branching_to_csv(R);
      for (auto const& c : report.checks) {
        out << "# check " << c.name << ": " << (c.passed ? "pass" : "FAIL");
        if (!c.passed) {
          out << " " << c.detail;
        }
        out << "\n";
      }
    }
    return report.all_passed() ? exit_pass : exit_check_failed;
  }

  inline int run_cpd(GroupSpec const& spec, unsigned D, bool oracle, Format fmt, std::ostream& out) {
    if (D < 1) {
      throw Error(Errc::precondition_violated, "--d must be >= 1");
    }
    FiniteGroup G      = build_group(spec);
    auto        R      = branching_matrix(G);
    auto        counts = class_counts(R.matrix, D);
    BigCount    order(G.order());
    bool        match = true;
    json        rows  = json::array();
    std::ostringstream csv;
    csv << "d,class_count,commuting_count,cp" << (oracle ? ",oracle_class_count,match" : "")
        << "\n";
    for (unsigned d = 1; d <= D; ++d) {
      BigCount    commuting = order * counts[d - 1];
      BigRational p         = make_rational(commuting, power(order, d));
      json        row{{"d", d},
                      {"class_count", counts[d].str()},
                      {"commuting_count", commuting.str()},
                      {"cp", to_string(p)}};
      csv << d << "," << counts[d] << "," << commuting << "," << to_string(p);
      if (oracle) {
        BigCount o  = oracle_class_count(G, d);
        bool     eq = o == counts[d];
        match       = match && eq;
        row["oracle_class_count"] = o.str();
        row["match"]              = eq;
        csv << "," << o << "," << (eq ? "1" : "0");
      }
      csv << "\n";
      rows.push_back(row);
    }
    if (fmt == Format::json) {
      json doc{{"group", spec.name}, {"order", G.order()}, {"size", R.matrix.size()}, {"rows", rows}};
      if (oracle) {
        doc["verdict"] = match ? "MATCH" : "MISMATCH";
      }
      out << doc.dump(2) << "\n";
    } else {
      out << csv.str();
      if (oracle) {
        out << "# verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
      }
    }
    return match ? exit_pass : exit_check_failed;
  }

  inline int run_ratio(GroupSpec const& spec, unsigned dmax, Format fmt, std::ostream& out) {
    if (dmax < 1) {
      throw Error(Errc::precondition_violated, "--dmax must be >= 1");
    }
    FiniteGroup G   = build_group(spec);
    auto        R   = branching_matrix(G);
    auto        seq = asymptotic_ratio(R, dmax);
    auto        mx  = max_abelian(R);
    if (fmt == Format::json) {
      json rows = json::array();
      for (unsigned d = 1; d <= dmax; ++d) {
        rows.push_back({{"d", d},
                        {"class_count", seq.counts[d].str()},
                        {"ratio", to_string(seq.ratios[d])},
                        {"ratio_decimal", to_decimal(seq.ratios[d], 15)},
                        {"difference", to_string(abs_value(seq.ratios[d] - seq.ratios[d - 1]))}});
      }
      out << json{{"group", spec.name},
                  {"order", G.order()},
                  {"a", seq.a.str()},
                  {"max_entry", mx.max_entry},
                  {"rows", rows},
                  {"estimate", to_string(seq.estimate())},
                  {"estimate_decimal", to_decimal(seq.estimate(), 15)},
                  {"last_difference", to_string(seq.last_difference())}}
                 .dump(2)
          << "\n";
    } else {
      out << "d,class_count,ratio,ratio_decimal,difference\n";
      for (unsigned d = 1; d <= dmax; ++d) {
        out << d << "," << seq.counts[d] << "," << to_string(seq.ratios[d]) << ","
            << to_decimal(seq.ratios[d], 15) << ","
            << to_string(abs_value(seq.ratios[d] - seq.ratios[d - 1])) << "\n";
      }
      out << "# a: " << seq.a << "\n";
      out << "# estimate: " << to_decimal(seq.estimate(), 15) << "\n";
      out << "# last_difference: " << to_decimal(seq.last_difference(), 15) << "\n";
    }
    return mx.consistent() ? exit_pass : exit_check_failed;
  }

  inline int run_symbolic(PsiMatrix const& B, unsigned D, Format fmt, std::ostream& out) {
    if (D < 1) {
      throw Error(Errc::precondition_violated, "--d must be >= 1");
    }
    auto structure = verify_symbolic_structure(B);
    bool ok        = true;
    for (auto const& c : structure) {
      ok = ok && c.passed;
    }
    auto degrees = first_column_degree_sequence(B, D);
    json rows    = json::array();
    std::ostringstream csv;
    csv << "d,degree,lower_bound,upper_bound,window_lower,window_upper,exact_checked\n";
    for (unsigned d = 1; d <= D; ++d) {
      auto deg    = degrees[d - 1].degree;
      auto bounds = cp_bounds_for_degree(B, d, deg);
      auto W      = degree_window_for_degree(B, d, deg);  // throws WindowViolated
      csv << d << "," << deg << "," << to_string(bounds.lower) << "," << to_string(bounds.upper)
          << "," << to_string(W.lower) << "," << to_string(W.upper) << ","
          << (degrees[d - 1].exact_checked ? 1 : 0) << "\n";
      rows.push_back({{"d", d},
                      {"degree", deg},
                      {"lower_bound", to_string(bounds.lower)},
                      {"upper_bound", to_string(bounds.upper)},
                      {"window_lower", to_string(W.lower)},
                      {"window_upper", to_string(W.upper)},
                      {"exact_checked", degrees[d - 1].exact_checked}});
    }
    if (fmt == Format::json) {
      json checks = json::array();
      for (auto const& c : structure) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      out << json{{"fixture", B.name()},
                  {"dimension", B.dimension},
                  {"rank", B.rank},
                  {"alpha", B.alpha()},
                  {"beta", B.size()},
                  {"rows", rows},
                  {"checks", checks}}
                 .dump(2)
          << "\n";
    } else {
      out << csv.str();
      out << "# fixture: " << B.name() << "\n";
      out << "# n: " << B.dimension << ", rank: " << B.rank << ", alpha: " << B.alpha()
          << ", beta: " << B.size() << "\n";
      for (auto const& c : structure) {
        out << "# check " << c.name << ": " << (c.passed ? "pass" : "FAIL");
        if (!c.passed) {
          out << " " << c.detail;
        }
        out << "\n";
      }
    }
    return ok ? exit_pass : exit_check_failed;
  }

  inline Family parse_family(std::string const& name) {
    if (name == "GL") return Family::GL;
    if (name == "U") return Family::U;
    if (name == "Sp") return Family::Sp;
    if (name == "O") return Family::O;
    throw Error(Errc::invalid_family_params, "unknown family '" + name + "'");
  }

  inline int run_family(FamilySpec const&       fs,
                        std::optional<unsigned> d,
                        Format                  fmt,
                        std::ostream&           out) {
    auto A = family_asymptote(fs);
    std::optional<BigRational> pw;
    if (d) {
      if (*d < 1) {
        throw Error(Errc::precondition_violated, "--d must be >= 1");
      }
      pw = power(A.base, *d - 1);
    }
    if (fmt == Format::json) {
      json doc{{"family", family_name(fs.family)},
               {"size", fs.size},
               {"q", fs.q},
               {"order", A.order.str()},
               {"a", A.a.str()},
               {"base", to_string(A.base)}};
      if (d) {
        doc["d"]          = *d;
        doc["base_power"] = to_string(*pw);
      }
      out << doc.dump(2) << "\n";
    } else {
      out << "family,size,q,order,a,base" << (d ? ",d,base_power" : "") << "\n";
      out << family_name(fs.family) << "," << fs.size << "," << fs.q << "," << A.order << ","
          << A.a << "," << to_string(A.base);
      if (d) {
        out << "," << *d << "," << to_string(*pw);
      }
      out << "\n";
    }
    return exit_pass;
  }

  //! Parses the command line, runs one subcommand and returns its exit
  //! code.  Reports go to out, diagnostics and timing to err.
  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Commuting probabilities and branching matrices of groups", "commprob"};
    app.require_subcommand(1);

    std::string spec_path, fixture_name, matrix_file, family, format = "csv";
    unsigned    d = 1, dmax = 20, size = 0;
    std::optional<unsigned> family_d;
    std::int64_t q      = 0;
    bool         oracle = false, export_grid_flag = false;

    auto add_format = [&](CLI::App* sub) {
      sub->add_option("--format", format, "Output format")
          ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* classes = app.add_subcommand("classes", "Conjugacy classes and z-classes");
    classes->add_option("spec", spec_path, "Group spec file")->required();
    add_format(classes);

    auto* branching = app.add_subcommand("branching", "Branching matrix with type legend");
    branching->add_option("spec", spec_path, "Group spec file")->required();
    add_format(branching);

    auto* cpd = app.add_subcommand("cpd", "c_G(d), |C_d(G)| and cp_d for d = 1..D");
    cpd->add_option("spec", spec_path, "Group spec file")->required();
    cpd->add_option("--d", d, "Largest d")->required();
    cpd->add_flag("--oracle", oracle, "Add the orbit-counting oracle column");
    add_format(cpd);

    auto* ratio = app.add_subcommand("ratio", "Convergence table of c_G(d)/a^d");
    ratio->add_option("spec", spec_path, "Group spec file")->required();
    ratio->add_option("--dmax", dmax, "Largest d")->required();
    add_format(ratio);

    auto* symbolic = app.add_subcommand("symbolic", "Degree bounds for psi-matrices");
    auto* fixture_opt = symbolic->add_option("--fixture", fixture_name, "gl2, gl3 or gl4");
    auto* file_opt    = symbolic->add_option("--matrix-file", matrix_file, "Exponent grid file");
    fixture_opt->excludes(file_opt);
    symbolic->add_option("--d", d, "Largest d");
    symbolic->add_flag("--export", export_grid_flag, "Print the exponent grid and exit");
    add_format(symbolic);

    auto* fam = app.add_subcommand("family", "Asymptotic base of a classical family");
    fam->add_option("--family", family, "GL, U, Sp or O")
        ->required()
        ->check(CLI::IsMember({"GL", "U", "Sp", "O"}));
    fam->add_option("--size", size, "n for GL/U, l for Sp/O")->required();
    fam->add_option("--q", q, "Field size")->required();
    fam->add_option("--d", family_d, "Also print base^(d-1)");
    add_format(fam);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
      app.parse(argv_rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_pass;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_pass;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }

    Format fmt   = format == "json" ? Format::json : Format::csv;
    auto   start = std::chrono::steady_clock::now();
    int    code  = exit_pass;
    try {
      if (classes->parsed()) {
        code = run_classes(load_spec(spec_path), fmt, out);
      } else if (branching->parsed()) {
        code = run_branching(load_spec(spec_path), fmt, out);
      } else if (cpd->parsed()) {
        code = run_cpd(load_spec(spec_path), d, oracle, fmt, out);
      } else if (ratio->parsed()) {
        code = run_ratio(load_spec(spec_path), dmax, fmt, out);
      } else if (symbolic->parsed()) {
        if (fixture_name.empty() && matrix_file.empty()) {
          err << "error: symbolic needs --fixture or --matrix-file\n";
          return exit_usage;
        }
        PsiMatrix B = matrix_file.empty() ? fixture(fixture_name) : import_grid(read_file(matrix_file));
        if (export_grid_flag) {
          out << export_grid(B);
        } else {
          code = run_symbolic(B, d, fmt, out);
        }
      } else if (fam->parsed()) {
        code = run_family(FamilySpec{parse_family(family), size, q}, family_d, fmt, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      switch (e.code()) {
        case Errc::window_violated:
        case Errc::inexact_division:
          return exit_check_failed;
        default:
          return exit_usage;
      }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    err << "# elapsed_ms: " << ms << "\n";
    return code;
  }

}  // namespace commprob::cli

#endif  // COMMPROB_CLI_HPP_
