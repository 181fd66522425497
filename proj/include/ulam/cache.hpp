/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ulam/engine.hpp"

namespace ulam::cache {

// Binary prefix cache, all integers little-endian:
//
//   "ULAM1"                 5-byte magic; the trailing digit is the version
//   a, b                    u64 each
//   term_count, horizon     u64 each
//   payload                 first term as an unsigned LEB128 varint, then
//                           term_count - 1 positive gaps as varints
//   crc                     u32, CRC-32 (IEEE) of every preceding byte
//
// The checksum is validated before any other field is read.

inline constexpr char kMagic[] = "ULAM";
inline constexpr char kVersion = '1';

std::vector<std::uint8_t> encode(const UlamPrefix& prefix);

/// Throws corrupt_cache (bad checksum, truncation, malformed payload) or
/// version_mismatch (recognised magic, other version digit).
UlamPrefix decode(std::span<const std::uint8_t> bytes);

/// Writes through a temporary file and renames it into place.
void write(const UlamPrefix& prefix, const std::filesystem::path& path);
UlamPrefix read(const std::filesystem::path& path);

struct Header {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t term_count = 0;
  std::uint64_t horizon = 0;
  std::uint64_t file_size = 0;
};

/// Validates the checksum and returns the header fields without decoding
/// the payload.
Header info(const std::filesystem::path& path);

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v);

/// Reads a varint at `pos`, advancing it. Throws corrupt_cache on truncated
/// or over-long encodings.
std::uint64_t get_varint(std::span<const std::uint8_t> in, std::size_t& pos);

std::uint32_t crc32(std::span<const std::uint8_t> bytes);

}  // namespace ulam::cache

namespace ulam {

/// Atomic replace: write to a sibling temp file, flush, rename over `path`.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

}  // namespace ulam
