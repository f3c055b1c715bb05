#ifndef NFV_ERRORS_HPP
#define NFV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nfv {

enum class errc {
    config_invalid,
    cap_exceeded,
    computation,
    non_monic,
    not_squarefree,
    rational_root_found,
    root_finding_failed,
    singular_basis,
    not_prime,
    zero_element,
    equal_ideals,
    band_too_large,
    no_generator_found,
};

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const { return code_; }

    // CLI contract: ConfigInvalid = 2, CapExceeded = 3, anything else = 1.
    int exit_code() const {
        switch (code_) {
            case errc::config_invalid: return 2;
            case errc::cap_exceeded:
            case errc::band_too_large: return 3;
            default: return 1;
        }
    }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace nfv

#endif
