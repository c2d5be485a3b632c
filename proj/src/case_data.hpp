#pragma once

#include <string_view>

namespace smallcx {

/// Contents of data/coclique_cases.txt, embedded at configure time.
std::string_view coclique_case_text();

}  // namespace smallcx
