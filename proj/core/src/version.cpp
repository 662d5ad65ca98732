#include "rayclass/version.hpp"

namespace rayclass {

const char* version_string() { return "0.1.0"; }

}  // namespace rayclass
