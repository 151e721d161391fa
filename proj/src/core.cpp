#include "utm/core.hpp"

#include <map>

namespace utm {

ErrorKind error_kind(const std::string& name) {
    static const std::map<std::string, ErrorKind> table = {
        {"DecoupledProblem", ErrorKind::User},
        {"WrongConditionCount", ErrorKind::User},
        {"ConfigError", ErrorKind::User},
        {"OracleUnavailable", ErrorKind::User},
        {"GridMismatch", ErrorKind::User},
        {"SignCaseMismatch", ErrorKind::User},
        {"InvalidMedium", ErrorKind::User},
        {"InvalidDeformation", ErrorKind::User},
        {"OriginUndefined", ErrorKind::User},
        {"RegionValidityViolation", ErrorKind::User},
        {"CanonicalizationFailure", ErrorKind::Degenerate},
        {"SingularSystem", ErrorKind::Degenerate},
        {"NearSingularAtK", ErrorKind::Numerical},
        {"QuadratureNonConvergence", ErrorKind::Numerical},
        {"ConstraintSingular", ErrorKind::Numerical},
        {"InstabilityDetected", ErrorKind::Numerical},
    };
    auto it = table.find(name);
    return it == table.end() ? ErrorKind::Numerical : it->second;
}

Error::Error(std::string name, const std::string& msg)
    : std::runtime_error(name + ": " + msg), name_(std::move(name)) {
    kind_ = error_kind(name_);
}

int Error::exit_code() const {
    switch (kind_) {
        case ErrorKind::User: return 2;
        case ErrorKind::Degenerate: return 3;
        case ErrorKind::Numerical: return 4;
    }
    return 4;
}

}  // namespace utm
