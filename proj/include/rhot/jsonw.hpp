#ifndef RHOT_JSONW_HPP
#define RHOT_JSONW_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace rhot {

// Minimal JSON emitter: keys keep insertion order and doubles are printed
// with 17 significant digits, so equal inputs give byte-equal documents.
class JsonWriter {
public:
    void begin_object() { open('{'); }
    void end_object() { close('}'); }
    void begin_array() { open('['); }
    void end_array() { close(']'); }

    void key(std::string_view k) {
        comma();
        append_quoted(k);
        buf_ += ':';
        just_keyed_ = true;
    }

    void value(std::string_view s) { comma(); append_quoted(s); }
    void value(const char* s) { value(std::string_view(s)); }
    void value(bool b) { comma(); buf_ += b ? "true" : "false"; }
    void value(std::int64_t v) { comma(); buf_ += std::to_string(v); }
    void value(std::uint64_t v) { comma(); buf_ += std::to_string(v); }
    void value(int v) { value(static_cast<std::int64_t>(v)); }
    void value(double v) {
        comma();
        char tmp[40];
        std::snprintf(tmp, sizeof tmp, "%.17g", v);
        buf_ += tmp;
    }
    void null() { comma(); buf_ += "null"; }

    template <typename T>
    void field(std::string_view k, const T& v) {
        key(k);
        value(v);
    }

    const std::string& str() const { return buf_; }

private:
    void open(char c) {
        comma();
        buf_ += c;
        need_comma_ = false;
    }
    void close(char c) {
        buf_ += c;
        need_comma_ = true;
    }
    void comma() {
        if (just_keyed_) {
            just_keyed_ = false;
            return;
        }
        if (need_comma_) buf_ += ',';
        need_comma_ = true;
    }
    void append_quoted(std::string_view s) {
        buf_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': buf_ += "\\\""; break;
                case '\\': buf_ += "\\\\"; break;
                case '\n': buf_ += "\\n"; break;
                case '\t': buf_ += "\\t"; break;
                case '\r': buf_ += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char tmp[8];
                        std::snprintf(tmp, sizeof tmp, "\\u%04x", c);
                        buf_ += tmp;
                    } else {
                        buf_ += c;
                    }
            }
        }
        buf_ += '"';
    }

    std::string buf_;
    bool need_comma_ = false;
    bool just_keyed_ = false;
};

}  // namespace rhot

#endif
