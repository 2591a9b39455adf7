#pragma once

// 128-bit intermediates for 64-bit modular products (GCC/Clang extension).
namespace steinhaus::detail {
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;
}  // namespace steinhaus::detail
