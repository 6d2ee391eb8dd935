#ifndef COMMPROB_ERROR_HPP_
#define COMMPROB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace commprob {

  enum class Errc {
    non_prime,
    reducible_modulus,
    invalid_field,
    invalid_element,
    cap_exceeded,
    mixed_carriers,
    element_not_in_group,
    not_commuting,
    unknown_type,
    unknown_fixture,
    window_violated,
    precondition_violated,
    inexact_division,
    invalid_family_params,
    parse_error,
    validation_error,
  };

  constexpr std::string_view errc_name(Errc code) noexcept {
    switch (code) {
      case Errc::non_prime: return "NonPrime";
      case Errc::reducible_modulus: return "ReducibleModulus";
      case Errc::invalid_field: return "InvalidField";
      case Errc::invalid_element: return "InvalidElement";
      case Errc::cap_exceeded: return "CapExceeded";
      case Errc::mixed_carriers: return "MixedCarriers";
      case Errc::element_not_in_group: return "ElementNotInGroup";
      case Errc::not_commuting: return "NotCommuting";
      case Errc::unknown_type: return "UnknownType";
      case Errc::unknown_fixture: return "UnknownFixture";
      case Errc::window_violated: return "WindowViolated";
      case Errc::precondition_violated: return "PreconditionViolated";
      case Errc::inexact_division: return "InexactDivision";
      case Errc::invalid_family_params: return "InvalidFamilyParams";
      case Errc::parse_error: return "ParseError";
      case Errc::validation_error: return "ValidationError";
    }
    return "Unknown";
  }

  //! Every failure raised by the library carries one of the Errc codes.
  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          _code(code) {}

    Errc code() const noexcept {
      return _code;
    }

   private:
    Errc _code;
  };

}  // namespace commprob

#endif  // COMMPROB_ERROR_HPP_
