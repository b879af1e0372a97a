#include "jseq/cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "jseq/errors.hpp"

namespace jseq {

namespace {

// Compact SHA-256 (FIPS 180-4), sufficient for payload integrity checks.
struct Sha256 {
    uint32_t h[8] = {0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
                     0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};
    std::array<uint8_t, 64> block{};
    size_t fill = 0;
    uint64_t total = 0;

    static uint32_t rotr(uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

    void compress(const uint8_t* p) {
        static const uint32_t K[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
            0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
            0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
            0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
            0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
            0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
            0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
            0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
            0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
            0xc67178f2};
        uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (uint32_t(p[4 * i]) << 24) | (uint32_t(p[4 * i + 1]) << 16) |
                   (uint32_t(p[4 * i + 2]) << 8) | uint32_t(p[4 * i + 3]);
        for (int i = 16; i < 64; ++i) {
            uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6], hh = h[7];
        for (int i = 0; i < 64; ++i) {
            uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            uint32_t ch = (e & f) ^ (~e & g);
            uint32_t t1 = hh + S1 + ch + K[i] + w[i];
            uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            uint32_t t2 = S0 + maj;
            hh = g; g = f; f = e; e = d + t1; d = c; c = b; b = a; a = t1 + t2;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d;
        h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
    }

    void update(const uint8_t* p, size_t len) {
        total += len;
        while (len) {
            size_t take = std::min(len, block.size() - fill);
            std::memcpy(block.data() + fill, p, take);
            fill += take;
            p += take;
            len -= take;
            if (fill == block.size()) {
                compress(block.data());
                fill = 0;
            }
        }
    }

    std::string hex() {
        uint64_t bits = total * 8;
        uint8_t pad = 0x80;
        update(&pad, 1);
        uint8_t z = 0;
        while (fill != 56) update(&z, 1);
        uint8_t lenb[8];
        for (int i = 0; i < 8; ++i) lenb[i] = uint8_t(bits >> (56 - 8 * i));
        update(lenb, 8);
        static const char* digits = "0123456789abcdef";
        std::string out;
        out.reserve(64);
        for (uint32_t v : h)
            for (int i = 28; i >= 0; i -= 4) out += digits[(v >> i) & 0xf];
        return out;
    }
};

// Exclusive lock file next to the cache; concurrent writers are a usage error.
struct WriterLock {
    std::string path;
    explicit WriterLock(const std::string& target) : path(target + ".lock") {
        int fd = ::open(path.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd < 0)
            throw UsageError("cache '" + target + "' is locked by another writer (" + path + ")");
        ::close(fd);
    }
    ~WriterLock() { ::unlink(path.c_str()); }
};

std::string render_payload(const CoefficientTable& table) {
    std::string payload;
    for (const auto& [n, v] : table.values) {
        payload += std::to_string(n);
        payload += '\t';
        payload += v.get_str();
        payload += '\n';
    }
    return payload;
}

bool plain_decimal(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (ch < '0' || ch > '9') return false;
    return s.size() == 1 || s[0] != '0';  // no leading zeros
}

}  // namespace

std::string sha256_hex(std::string_view data) {
    Sha256 s;
    s.update(reinterpret_cast<const uint8_t*>(data.data()), data.size());
    return s.hex();
}

void cache_store(const CoefficientTable& table, const std::string& path) {
    if (table.values.empty() || table.values.begin()->first != -1)
        throw DomainError("cache_store wants a table starting at n=-1");
    WriterLock lock(path);
    std::string payload = render_payload(table);
    long count = table.max_n() + 1;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot open cache '" + path + "' for writing");
    out << "jseq-cache v1 N=" << count << " route=" << table.source
        << " sha256=" << sha256_hex(payload) << "\n";
    out << payload;
    out.flush();
    if (!out) throw UsageError("short write to cache '" + path + "'");
}

CoefficientTable cache_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open cache '" + path + "'");
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty cache file", 1);

    long count = -1;
    std::string route, sum;
    {
        std::istringstream hs(header);
        std::string magic, ver, field;
        hs >> magic >> ver;
        if (magic != "jseq-cache" || ver != "v1")
            throw ParseError("bad cache header '" + header + "'", 1);
        while (hs >> field) {
            if (field.rfind("N=", 0) == 0)
                count = std::stol(field.substr(2));
            else if (field.rfind("route=", 0) == 0)
                route = field.substr(6);
            else if (field.rfind("sha256=", 0) == 0)
                sum = field.substr(7);
            else
                throw ParseError("unknown header field '" + field + "'", 1);
        }
        if (count < 1 || route.empty() || sum.size() != 64)
            throw ParseError("incomplete cache header", 1);
    }

    std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (sha256_hex(payload) != sum)
        throw IntegrityError("cache checksum mismatch in '" + path + "'");

    CoefficientTable table;
    table.source = "cache";
    std::istringstream body(payload);
    std::string line;
    long lineno = 1;  // header was line 1
    long expect = -1;
    while (std::getline(body, line)) {
        ++lineno;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError("missing tab separator", lineno);
        std::string ns = line.substr(0, tab), vs = line.substr(tab + 1);
        long n;
        try {
            size_t used = 0;
            n = std::stol(ns, &used);
            if (used != ns.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("bad index '" + ns + "'", lineno);
        }
        if (n != expect) throw ParseError("indices not ascending from -1", lineno);
        if (n >= 0 && !plain_decimal(vs))
            throw ParseError("coefficient not a plain decimal", lineno);
        if (n == -1 && vs != "1") throw ParseError("c(-1) must be 1", lineno);
        table.values[n] = BigInt(vs);
        ++expect;
    }
    if (expect != count)
        throw ParseError("expected " + std::to_string(count + 1) + " coefficient lines, got " +
                             std::to_string(expect + 1),
                         lineno);
    return table;
}

bool cache_covers(const std::string& path, long count) {
    try {
        CoefficientTable t = cache_load(path);
        return t.max_n() + 1 >= count;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace jseq
