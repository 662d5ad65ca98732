#pragma once

namespace rayclass {

const char* version_string();

}  // namespace rayclass
