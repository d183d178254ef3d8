#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mirig_cli {

  struct Check {
    std::string                  name;
    std::string                  expected;
    std::string                  reference;
    std::function<std::string()> compute;
  };

  enum class Suite { quick, full };

  std::vector<Check> checks(Suite suite);

}  // namespace mirig_cli
