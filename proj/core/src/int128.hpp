#pragma once

namespace typik::detail {

__extension__ typedef __int128 Int128;

}  // namespace typik::detail
