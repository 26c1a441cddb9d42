#pragma once
#include <sstream>
#include <stdexcept>

namespace capform {

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct logic_bug : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace capform

// input / mathematical-precondition violations (bad user data, wrong parent, ...)
#define CF_DOMAIN_CHECK(cond, msg)                                          \
    do {                                                                    \
        if (!(cond)) {                                                      \
            std::ostringstream cf_os_;                                      \
            cf_os_ << msg;                                                  \
            throw capform::domain_error(cf_os_.str());                      \
        }                                                                   \
    } while (0)

// internal invariants that should be unreachable
#define CF_LOGIC_CHECK(cond, msg)                                           \
    do {                                                                    \
        if (!(cond)) {                                                      \
            std::ostringstream cf_os_;                                      \
            cf_os_ << "internal: " << msg;                                  \
            throw capform::logic_bug(cf_os_.str());                        \
        }                                                                   \
    } while (0)
