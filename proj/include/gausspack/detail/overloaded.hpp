#pragma once

namespace gausspack::detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace gausspack::detail
