#ifndef COMMPROB_TESTS_SUPPORT_HPP_
#define COMMPROB_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commprob/spec.hpp"

namespace commprob::testing {

  inline std::string corpus_path(std::string const& stem) {
    return std::string(COMMPROB_CORPUS_DIR) + "/" + stem + ".json";
  }

  inline std::string slurp(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline FiniteGroup corpus_group(std::string const& stem) {
    return build_group(parse_group_spec(slurp(corpus_path(stem))));
  }

  //! Values produced by tests/oracle/brute_force.py (plain tuple
  //! enumeration, independent of this library).
  struct OracleRow {
    char const*                stem;
    std::size_t                order;
    std::vector<std::uint64_t> class_counts;      // c_G(1), c_G(2), ...
    std::vector<std::uint64_t> commuting_counts;  // |C_1|, |C_2|, |C_3|
    std::vector<char const*>   cp;                // cp_1, cp_2, cp_3
    std::uint64_t              max_abelian;
  };

  inline std::vector<OracleRow> const& oracle_table() {
    static std::vector<OracleRow> const rows{
        {"s3", 6, {3, 8, 21, 56}, {6, 18, 48}, {"1", "1/2", "2/9"}, 3},
        {"d4", 8, {5, 22, 92, 376}, {8, 40, 176}, {"1", "5/8", "11/32"}, 4},
        {"q8", 8, {5, 22, 92, 376}, {8, 40, 176}, {"1", "5/8", "11/32"}, 4},
        {"s4", 24, {5, 21, 84, 331}, {24, 120, 504}, {"1", "5/24", "7/192"}, 4},
        {"gl2_f2", 6, {3, 8, 21, 56}, {6, 18, 48}, {"1", "1/2", "2/9"}, 3},
        {"gl2_f3", 48, {8, 56, 392, 2816}, {48, 384, 2688}, {"1", "1/6", "7/288"}, 8},
        {"gl3_f2", 168, {6, 32, 177}, {168, 1008, 5376}, {"1", "1/28", "1/882"}, 7},
    };
    return rows;
  }

  //! Reads a matrix written with entries "0", "psi" and "psi^k", one row
  //! per line, as an exponent grid (-1 for zero).
  inline std::vector<std::vector<int>> read_psi_rows(std::string const& stem) {
    std::istringstream            in(slurp(std::string(COMMPROB_TEST_DATA_DIR) + "/" + stem + "_psi.txt"));
    std::vector<std::vector<int>> rows;
    std::string                   line;
    while (std::getline(in, line)) {
      if (line.empty()) {
        continue;
      }
      std::istringstream cells(line);
      std::string        cell;
      auto&              row = rows.emplace_back();
      while (cells >> cell) {
        if (cell == "0") {
          row.push_back(-1);
        } else if (cell == "psi") {
          row.push_back(1);
        } else {
          row.push_back(std::stoi(cell.substr(4)));  // "psi^k"
        }
      }
    }
    return rows;
  }

  inline std::vector<std::string> corpus_stems() {
    return {"s3", "d4", "q8", "s4", "gl2_f2", "gl2_f3", "gl3_f2"};
  }

}  // namespace commprob::testing

#endif  // COMMPROB_TESTS_SUPPORT_HPP_
