/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ulam/cache.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <random>

#include <unistd.h>
#include <zlib.h>

#include "ulam/checked.hpp"
#include "ulam/error.hpp"

namespace ulam {

namespace {

constexpr std::size_t kMagicSize = 5;
constexpr std::size_t kHeaderSize = kMagicSize + 4 * 8;
constexpr std::size_t kCrcSize = 4;

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t pos) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
  return v;
}

[[noreturn]] void corrupt(const std::string& what) {
  throw Error(ErrorCode::corrupt_cache, "corrupt cache: " + what);
}

// Checks size, checksum and magic; everything else is trusted afterwards.
void check_envelope(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize + kCrcSize) corrupt("file too short");
  const std::size_t body = bytes.size() - kCrcSize;
  std::uint32_t stored = 0;
  for (int i = 0; i < 4; ++i) stored |= static_cast<std::uint32_t>(bytes[body + i]) << (8 * i);
  if (cache::crc32(bytes.first(body)) != stored) corrupt("checksum mismatch");
  if (std::memcmp(bytes.data(), cache::kMagic, 4) != 0) corrupt("bad magic");
  if (bytes[4] != static_cast<std::uint8_t>(cache::kVersion)) {
    throw Error(ErrorCode::version_mismatch,
                std::string("cache version '") + static_cast<char>(bytes[4]) + "' not supported");
  }
}

}  // namespace

namespace cache {

std::uint32_t crc32(std::span<const std::uint8_t> bytes) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  std::size_t done = 0;
  while (done < bytes.size()) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(bytes.size() - done, 1u << 30));
    crc = ::crc32(crc, bytes.data() + done, chunk);
    done += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint64_t get_varint(std::span<const std::uint8_t> in, std::size_t& pos) {
  std::uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    if (pos >= in.size()) corrupt("truncated varint");
    const std::uint8_t byte = in[pos++];
    if (shift == 63 && byte > 1) corrupt("varint overflows 64 bits");
    v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if (!(byte & 0x80)) return v;
  }
  corrupt("varint longer than 10 bytes");
}

std::vector<std::uint8_t> encode(const UlamPrefix& prefix) {
  std::vector<std::uint8_t> out;
  auto terms = prefix.terms();
  out.reserve(kHeaderSize + terms.size() * 2 + kCrcSize);
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(static_cast<std::uint8_t>(kVersion));
  put_u64(out, prefix.params().a());
  put_u64(out, prefix.params().b());
  put_u64(out, terms.size());
  put_u64(out, prefix.horizon());
  if (!terms.empty()) {
    put_varint(out, terms[0]);
    for (std::size_t i = 1; i < terms.size(); ++i) put_varint(out, terms[i] - terms[i - 1]);
  }
  const std::uint32_t crc = crc32(out);
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(crc >> (8 * i)));
  return out;
}

UlamPrefix decode(std::span<const std::uint8_t> bytes) {
  check_envelope(bytes);
  const std::uint64_t a = get_u64(bytes, kMagicSize);
  const std::uint64_t b = get_u64(bytes, kMagicSize + 8);
  const std::uint64_t count = get_u64(bytes, kMagicSize + 16);
  const std::uint64_t horizon = get_u64(bytes, kMagicSize + 24);

  const auto payload = bytes.first(bytes.size() - kCrcSize);
  // Every varint takes at least one byte.
  if (count > payload.size() - kHeaderSize) corrupt("term count exceeds payload");

  std::vector<std::uint64_t> terms;
  terms.reserve(count);
  std::size_t pos = kHeaderSize;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t v = get_varint(payload, pos);
    if (i == 0) {
      terms.push_back(v);
    } else {
      if (v == 0) corrupt("zero gap");
      std::uint64_t next;
      if (__builtin_add_overflow(terms.back(), v, &next)) corrupt("term overflows 64 bits");
      terms.push_back(next);
    }
  }
  if (pos != payload.size()) corrupt("trailing bytes after payload");

  try {
    return UlamPrefix::from_parts(UlamParams::validate(a, b), std::move(terms), horizon);
  } catch (const Error& e) {
    corrupt(e.what());
  }
}

void write(const UlamPrefix& prefix, const std::filesystem::path& path) {
  write_file_atomic(path, encode(prefix));
}

UlamPrefix read(const std::filesystem::path& path) { return decode(read_file(path)); }

Header info(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  check_envelope(bytes);
  return Header{get_u64(bytes, kMagicSize), get_u64(bytes, kMagicSize + 8),
                get_u64(bytes, kMagicSize + 16), get_u64(bytes, kMagicSize + 24),
                bytes.size()};
}

}  // namespace cache

// ---------------------------------------------------------------------------

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::io_error, "read failed for " + path.string());
  return bytes;
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::random_device rd;
  const fs::path tmp =
      dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()) + "." +
             std::to_string(rd()));
  {
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) throw Error(ErrorCode::io_error, "cannot create " + tmp.string());
    const bool ok = std::fwrite(bytes.data(), 1, bytes.size(), f) == bytes.size() &&
                    std::fflush(f) == 0 && ::fsync(::fileno(f)) == 0;
    if (std::fclose(f) != 0 || !ok) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::io_error, "write failed for " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::io_error, "cannot move report into place at " + path.string());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                                    text.size()));
}

}  // namespace ulam
