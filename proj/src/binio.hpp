#pragma once

// Little-endian fixed-width I/O for the cache containers.

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>

namespace glab::binio {

template <typename T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
    std::memcpy(&v, b, sizeof(T));
  }
  return v;
}

template <typename T>
void put(std::ostream& out, T v) {
  v = to_little(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
bool get(std::istream& in, T& v) {
  if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) return false;
  v = to_little(v);
  return true;
}

inline void put_doubles(std::ostream& out, std::span<const double> xs) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(xs.data()),
              static_cast<std::streamsize>(xs.size_bytes()));
  } else {
    for (double x : xs) put(out, x);
  }
}

inline bool get_doubles(std::istream& in, std::span<double> xs) {
  if (!in.read(reinterpret_cast<char*>(xs.data()), static_cast<std::streamsize>(xs.size_bytes())))
    return false;
  if constexpr (std::endian::native == std::endian::big)
    for (double& x : xs) x = to_little(x);
  return true;
}

inline constexpr char kMagic[4] = {'G', 'L', 'A', 'B'};

}  // namespace glab::binio
