#ifndef COMMPROB_SPEC_HPP_
#define COMMPROB_SPEC_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "element.hpp"
#include "error.hpp"
#include "field.hpp"
#include "group.hpp"

namespace commprob {

  struct FieldSpec {
    std::uint32_t              p = 0;
    unsigned                   k = 1;
    std::vector<std::uint32_t> modulus;  // constant term first; empty for k = 1
  };

  //! A group given by generators, as read from a JSON document:
  //!
  //!   {"name": "GL2(F3)", "kind": "matrix", "field": {"p": 3, "k": 1},
  //!    "degree": 2, "generators": [[[2,0],[0,1]], [[2,1],[2,0]]]}
  //!
  //!   {"name": "S3", "kind": "permutation", "degree": 3,
  //!    "generators": [[1,0,2], [1,2,0]]}
  //!
  //! Matrix entries are field element indices (base-p digit encoding of
  //! the polynomial representative for k > 1).  "cap" optionally bounds
  //! the group order.
  struct GroupSpec {
    std::string               name;
    GroupElement::Kind        kind = GroupElement::Kind::permutation;
    std::optional<FieldSpec>  field;
    std::size_t               degree = 0;
    std::vector<GroupElement> generators;
    std::size_t               cap = default_group_cap;
  };

  namespace detail {
    using json = nlohmann::json;

    [[noreturn]] inline void invalid(std::string const& path, std::string const& why) {
      throw Error(Errc::validation_error, path + ": " + why);
    }

    inline json const& require(json const& obj, std::string const& key, std::string const& path) {
      if (!obj.contains(key)) {
        invalid(path + key, "missing field");
      }
      return obj.at(key);
    }

    inline std::uint64_t as_uint(json const& v, std::string const& path) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        invalid(path, "expected a non-negative integer");
      }
      return v.get<std::uint64_t>();
    }

    inline std::vector<std::uint32_t> as_uint_array(json const& v, std::string const& path) {
      if (!v.is_array()) {
        invalid(path, "expected an array");
      }
      std::vector<std::uint32_t> out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        auto x = as_uint(v[i], path + "[" + std::to_string(i) + "]");
        if (x > 0xFFFFFFFFu) {
          invalid(path + "[" + std::to_string(i) + "]", "value too large");
        }
        out.push_back(static_cast<std::uint32_t>(x));
      }
      return out;
    }
  }  // namespace detail

  inline GroupSpec parse_group_spec(std::string_view document) {
    using detail::json;
    json doc;
    try {
      doc = json::parse(document);
    } catch (json::parse_error const& e) {
      throw Error(Errc::parse_error, e.what());
    }
    if (!doc.is_object()) {
      throw Error(Errc::parse_error, "group spec must be a single JSON object");
    }
    GroupSpec spec;
    auto const& name = detail::require(doc, "name", "");
    if (!name.is_string()) {
      detail::invalid("name", "expected a string");
    }
    spec.name = name.get<std::string>();

    auto const& kind = detail::require(doc, "kind", "");
    if (kind == "matrix") {
      spec.kind = GroupElement::Kind::matrix;
    } else if (kind == "permutation") {
      spec.kind = GroupElement::Kind::permutation;
    } else {
      detail::invalid("kind", "expected \"matrix\" or \"permutation\"");
    }
    spec.degree = detail::as_uint(detail::require(doc, "degree", ""), "degree");
    if (spec.degree < 1) {
      detail::invalid("degree", "must be >= 1");
    }
    if (doc.contains("cap")) {
      spec.cap = detail::as_uint(doc["cap"], "cap");
    }

    std::shared_ptr<Field const> field;
    if (spec.kind == GroupElement::Kind::matrix) {
      auto const& f = detail::require(doc, "field", "");
      if (!f.is_object()) {
        detail::invalid("field", "expected an object");
      }
      FieldSpec fs;
      fs.p = static_cast<std::uint32_t>(detail::as_uint(detail::require(f, "p", "field."), "field.p"));
      if (f.contains("k")) {
        fs.k = static_cast<unsigned>(detail::as_uint(f["k"], "field.k"));
      }
      if (f.contains("modulus")) {
        fs.modulus = detail::as_uint_array(f["modulus"], "field.modulus");
      }
      try {
        field = std::make_shared<Field const>(fs.p, fs.k, fs.modulus);
      } catch (Error const& e) {
        detail::invalid("field", e.what());
      }
      spec.field = std::move(fs);
    } else if (doc.contains("field")) {
      detail::invalid("field", "permutation groups take no field");
    }

    auto const& gens = detail::require(doc, "generators", "");
    if (!gens.is_array() || gens.empty()) {
      detail::invalid("generators", "expected a non-empty array");
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::string path = "generators[" + std::to_string(g) + "]";
      try {
        if (spec.kind == GroupElement::Kind::permutation) {
          auto images = detail::as_uint_array(gens[g], path);
          if (images.size() != spec.degree) {
            detail::invalid(path, "expected " + std::to_string(spec.degree) + " images");
          }
          spec.generators.push_back(GroupElement::permutation(std::move(images)));
        } else {
          if (!gens[g].is_array() || gens[g].size() != spec.degree) {
            detail::invalid(path, "expected " + std::to_string(spec.degree) + " rows");
          }
          std::vector<std::uint32_t> entries;
          for (std::size_t r = 0; r < spec.degree; ++r) {
            auto row = detail::as_uint_array(gens[g][r], path + "[" + std::to_string(r) + "]");
            if (row.size() != spec.degree) {
              detail::invalid(path + "[" + std::to_string(r) + "]",
                              "expected " + std::to_string(spec.degree) + " entries");
            }
            entries.insert(entries.end(), row.begin(), row.end());
          }
          spec.generators.push_back(GroupElement::matrix(field, spec.degree, std::move(entries)));
        }
      } catch (Error const& e) {
        if (e.code() == Errc::validation_error) {
          throw;
        }
        detail::invalid(path, e.what());
      }
    }
    return spec;
  }

  inline FiniteGroup build_group(GroupSpec const& spec) {
    return FiniteGroup::generate(spec.generators, spec.cap);
  }

  //! Compact text form: "1 0 2" for permutations, "1 1;0 1" for matrices.
  inline std::string format_element(GroupElement const& g) {
    std::string out;
    auto const& data = g.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (i > 0) {
        bool row_break = g.kind() == GroupElement::Kind::matrix && i % g.degree() == 0;
        out += row_break ? ";" : " ";
      }
      out += std::to_string(data[i]);
    }
    return out;
  }

}  // namespace commprob

#endif  // COMMPROB_SPEC_HPP_
