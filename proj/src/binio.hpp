#pragma once

// Little-endian binary readers/writers for the artifact files. Doubles are
// persisted as raw IEEE-754 bits so load is bit-exact.

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace fairtab {

class BinWriter {
  public:
    explicit BinWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw IoError("cannot open '" + path + "' for writing");
        path_ = path;
    }

    void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
    void u32(std::uint32_t v) { raw(&v, sizeof v); }
    void u64(std::uint64_t v) { raw(&v, sizeof v); }
    void f64(double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        u64(bits);
    }
    void str(const std::string& s) {
        u64(s.size());
        raw(s.data(), s.size());
    }
    void f64s(const std::vector<double>& v) {
        u64(v.size());
        for (double x : v) f64(x);
    }
    void done() {
        out_.flush();
        if (!out_) throw IoError("failed writing '" + path_ + "'");
    }

  private:
    void raw(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    }
    std::ofstream out_;
    std::string path_;
};

class BinReader {
  public:
    explicit BinReader(const std::string& path) : in_(path, std::ios::binary) {
        if (!in_) throw IoError("cannot open '" + path + "' for reading");
        path_ = path;
    }

    std::uint8_t u8() {
        int c = in_.get();
        if (c == EOF) fail();
        return static_cast<std::uint8_t>(c);
    }
    std::uint32_t u32() {
        std::uint32_t v;
        raw(&v, sizeof v);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v;
        raw(&v, sizeof v);
        return v;
    }
    double f64() {
        const std::uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }
    std::string str() {
        const std::uint64_t n = u64();
        std::string s(n, '\0');
        raw(s.data(), n);
        return s;
    }
    std::vector<double> f64s() {
        const std::uint64_t n = u64();
        std::vector<double> v(n);
        for (auto& x : v) x = f64();
        return v;
    }

  private:
    void raw(void* p, std::size_t n) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (in_.gcount() != static_cast<std::streamsize>(n)) fail();
    }
    [[noreturn]] void fail() { throw IoError("unexpected end of file in '" + path_ + "'"); }
    std::ifstream in_;
    std::string path_;
};

}  // namespace fairtab
