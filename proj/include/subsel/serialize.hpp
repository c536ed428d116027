// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Binary index file. Layout, all integers little-endian:
//   header   "SUBSEL01" | u32 version | u32 section count | u64 n | u32 tau | u32 reserved
//   table    per section: u32 id | u32 crc32 | u64 offset | u64 length
//   payload  sections back to back
// Arrays are stored 0-based. Range-extremum tables are rebuilt on load.

#include <zlib.h>

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "subsel/subsel.hpp"

namespace subsel {

static_assert(std::endian::native == std::endian::little, "index files assume a little-endian host");

namespace io {

inline constexpr std::array<char, 8> kMagic{'S', 'U', 'B', 'S', 'E', 'L', '0', '1'};
inline constexpr std::uint32_t kVersion = 1;

enum class Section : std::uint32_t {
    Text = 1,
    SuffixArray = 2,
    InverseSuffixArray = 3,
    Lcp = 4,
    ReverseText = 5,
    ReverseSuffixArray = 6,
    ReverseInverseSuffixArray = 7,
    ReverseLcp = 8,
    RankGrid = 9,
    MinSuffixWords = 10,
    MaxSuffixWords = 11,
};

inline constexpr std::size_t kSectionCount = 11;
inline constexpr std::size_t kHeaderBytes = 8 + 4 + 4 + 8 + 4 + 4;
inline constexpr std::size_t kEntryBytes = 4 + 4 + 8 + 8;

class Writer {
public:
    template <class T>
    void put(T value) {
        const auto* p = reinterpret_cast<const char*>(&value);
        bytes_.insert(bytes_.end(), p, p + sizeof(T));
    }
    template <class T>
    void put_array(std::span<const T> values) {
        const auto* p = reinterpret_cast<const char*>(values.data());
        bytes_.insert(bytes_.end(), p, p + values.size_bytes());
    }
    void put_bytes(std::string_view s) { bytes_.insert(bytes_.end(), s.begin(), s.end()); }
    std::vector<char>& bytes() { return bytes_; }

private:
    std::vector<char> bytes_;
};

class Reader {
public:
    explicit Reader(std::span<const char> bytes) : bytes_(bytes) {}

    template <class T>
    T get() {
        T value;
        std::memcpy(&value, take(sizeof(T)).data(), sizeof(T));
        return value;
    }
    template <class T>
    std::vector<T> get_array(std::size_t count) {
        if (count > remaining() / sizeof(T)) throw FormatError("index file: section shorter than declared");
        std::vector<T> values(count);
        std::memcpy(values.data(), take(count * sizeof(T)).data(), count * sizeof(T));
        return values;
    }
    std::string get_bytes(std::size_t count) {
        const auto s = take(count);
        return std::string(s.begin(), s.end());
    }
    std::size_t remaining() const { return bytes_.size() - at_; }

private:
    std::span<const char> take(std::size_t count) {
        if (count > remaining()) throw FormatError("index file: section shorter than declared");
        const auto s = bytes_.subspan(at_, count);
        at_ += count;
        return s;
    }

    std::span<const char> bytes_;
    std::size_t at_ = 0;
};

inline std::uint32_t checksum(std::span<const char> bytes) {
    uLong crc = crc32(0L, Z_NULL, 0);
    std::size_t done = 0;
    while (done < bytes.size()) {
        const auto chunk = static_cast<uInt>(std::min<std::size_t>(bytes.size() - done, 1u << 30));
        crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data() + done), chunk);
        done += chunk;
    }
    return static_cast<std::uint32_t>(crc);
}

inline std::vector<char> encode_structure_arrays(const SuffixStructure& s, Section which) {
    Writer w;
    switch (which) {
        case Section::Text:
        case Section::ReverseText: w.put_bytes(s.text()); break;
        case Section::SuffixArray:
        case Section::ReverseSuffixArray: w.put_array(s.sa_array()); break;
        case Section::InverseSuffixArray:
        case Section::ReverseInverseSuffixArray: w.put_array(s.isa_array()); break;
        default: w.put_array(s.lcp_array()); break;
    }
    return std::move(w.bytes());
}

inline std::vector<char> encode_grid(const RankGrid& grid) {
    Writer w;
    w.put(static_cast<std::uint32_t>(grid.levels()));
    for (int l = 0; l < grid.levels(); ++l) {
        const auto& bv = grid.level_bits()[static_cast<std::size_t>(l)];
        w.put(grid.level_zeros()[static_cast<std::size_t>(l)]);
        w.put(static_cast<std::uint64_t>(bv.words().size()));
        w.put_array(bv.words());
        w.put(static_cast<std::uint64_t>(bv.superblocks().size()));
        w.put_array(bv.superblocks());
    }
    return std::move(w.bytes());
}

inline RankGrid decode_grid(std::span<const char> bytes, std::size_t n) {
    Reader r(bytes);
    const auto levels = r.get<std::uint32_t>();
    if (levels > 32) throw FormatError("index file: rank grid level count out of range");
    std::vector<RankBitVector> bits;
    std::vector<std::uint64_t> zeros;
    for (std::uint32_t l = 0; l < levels; ++l) {
        zeros.push_back(r.get<std::uint64_t>());
        auto words = r.get_array<std::uint64_t>(static_cast<std::size_t>(r.get<std::uint64_t>()));
        auto supers = r.get_array<std::uint64_t>(static_cast<std::size_t>(r.get<std::uint64_t>()));
        bits.push_back(RankBitVector::from_parts(n, std::move(words), std::move(supers)));
    }
    if (r.remaining() != 0) throw FormatError("index file: trailing bytes in rank grid");
    return RankGrid::from_parts(n, std::move(bits), std::move(zeros));
}

}  // namespace io

inline void save_index(const SubstringIndex& index, std::ostream& out) {
    using io::Section;
    const auto& fwd = index.index().forward();
    const auto& rev = index.index().reverse();
    std::vector<std::pair<Section, std::vector<char>>> sections;
    sections.emplace_back(Section::Text, io::encode_structure_arrays(fwd, Section::Text));
    sections.emplace_back(Section::SuffixArray, io::encode_structure_arrays(fwd, Section::SuffixArray));
    sections.emplace_back(Section::InverseSuffixArray, io::encode_structure_arrays(fwd, Section::InverseSuffixArray));
    sections.emplace_back(Section::Lcp, io::encode_structure_arrays(fwd, Section::Lcp));
    sections.emplace_back(Section::ReverseText, io::encode_structure_arrays(rev, Section::ReverseText));
    sections.emplace_back(Section::ReverseSuffixArray, io::encode_structure_arrays(rev, Section::ReverseSuffixArray));
    sections.emplace_back(Section::ReverseInverseSuffixArray, io::encode_structure_arrays(rev, Section::ReverseInverseSuffixArray));
    sections.emplace_back(Section::ReverseLcp, io::encode_structure_arrays(rev, Section::ReverseLcp));
    sections.emplace_back(Section::RankGrid, io::encode_grid(index.grid()));
    {
        io::Writer w;
        w.put_array(index.min_suffix_index().words());
        sections.emplace_back(Section::MinSuffixWords, std::move(w.bytes()));
    }
    {
        io::Writer w;
        w.put_array(index.max_suffix_index().words());
        sections.emplace_back(Section::MaxSuffixWords, std::move(w.bytes()));
    }

    io::Writer head;
    head.put_bytes(std::string_view(io::kMagic.data(), io::kMagic.size()));
    head.put(io::kVersion);
    head.put(static_cast<std::uint32_t>(sections.size()));
    head.put(static_cast<std::uint64_t>(index.size()));
    head.put(static_cast<std::uint32_t>(index.tau()));
    head.put(std::uint32_t{0});
    std::uint64_t offset = io::kHeaderBytes + io::kEntryBytes * sections.size();
    for (const auto& [id, bytes] : sections) {
        head.put(static_cast<std::uint32_t>(id));
        head.put(io::checksum(bytes));
        head.put(offset);
        head.put(static_cast<std::uint64_t>(bytes.size()));
        offset += bytes.size();
    }
    out.write(head.bytes().data(), static_cast<std::streamsize>(head.bytes().size()));
    for (const auto& [id, bytes] : sections) out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::ios_base::failure("index file: write failed");
}

/// Throws FormatError on any structural or checksum problem.
inline SubstringIndex load_index(std::span<const char> file) {
    using io::Section;
    io::Reader head(file);
    if (file.size() < io::kHeaderBytes || std::memcmp(file.data(), io::kMagic.data(), io::kMagic.size()) != 0) {
        throw FormatError("index file: bad magic");
    }
    head.get_bytes(io::kMagic.size());
    if (head.get<std::uint32_t>() != io::kVersion) throw FormatError("index file: unsupported version");
    const auto count = head.get<std::uint32_t>();
    const auto n64 = head.get<std::uint64_t>();
    const auto tau = head.get<std::uint32_t>();
    head.get<std::uint32_t>();
    if (count != io::kSectionCount) throw FormatError("index file: unexpected section count");
    if (n64 == 0 || n64 > static_cast<std::uint64_t>(kMaxTextLength)) throw FormatError("index file: text length out of range");
    const auto n = static_cast<std::size_t>(n64);

    std::array<std::span<const char>, io::kSectionCount + 1> payload{};
    for (std::uint32_t s = 0; s < count; ++s) {
        const auto id = head.get<std::uint32_t>();
        const auto crc = head.get<std::uint32_t>();
        const auto offset = head.get<std::uint64_t>();
        const auto length = head.get<std::uint64_t>();
        if (id < 1 || id > io::kSectionCount || !payload[id].empty()) throw FormatError("index file: bad section id");
        if (offset > file.size() || length > file.size() - offset) throw FormatError("index file: section out of bounds");
        payload[id] = file.subspan(static_cast<std::size_t>(offset), static_cast<std::size_t>(length));
        if (io::checksum(payload[id]) != crc) throw FormatError("index file: checksum mismatch");
    }
    auto section = [&](Section id) { return payload[static_cast<std::size_t>(id)]; };
    auto exact = [&](Section id, std::size_t bytes) {
        if (section(id).size() != bytes) throw FormatError("index file: section has the wrong size");
        return io::Reader(section(id));
    };
    auto structure = [&](Section text, Section sa, Section isa, Section lcp) {
        return SuffixStructure::from_arrays(exact(text, n).get_bytes(n), exact(sa, 4 * n).get_array<std::uint32_t>(n),
                                            exact(isa, 4 * n).get_array<std::uint32_t>(n),
                                            exact(lcp, 4 * n).get_array<std::uint32_t>(n));
    };

    EnhancedIndex index(structure(Section::Text, Section::SuffixArray, Section::InverseSuffixArray, Section::Lcp),
                        structure(Section::ReverseText, Section::ReverseSuffixArray,
                                  Section::ReverseInverseSuffixArray, Section::ReverseLcp));
    RankGrid grid = io::decode_grid(section(Section::RankGrid), n);
    auto min_words = exact(Section::MinSuffixWords, 8 * n).get_array<std::uint64_t>(n);
    auto max_words = exact(Section::MaxSuffixWords, 16 * n).get_array<std::uint64_t>(2 * n);
    return SubstringIndex(std::move(index), std::move(grid),
                          MinSuffixIndex::from_words(static_cast<pos_t>(n), static_cast<int>(tau), std::move(min_words)),
                          MaxSuffixIndex::from_words(static_cast<pos_t>(n), std::move(max_words)));
}

inline void save_index_file(const SubstringIndex& index, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    save_index(index, out);
}

/// std::ios_base::failure when the file cannot be read, FormatError when it is not a valid index.
inline SubstringIndex load_index_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw std::ios_base::failure("cannot read " + path);
    return load_index(bytes);
}

}  // namespace subsel
