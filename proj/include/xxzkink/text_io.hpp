#ifndef XXZKINK_TEXT_IO_HPP
#define XXZKINK_TEXT_IO_HPP

#include <complex>
#include <string>
#include <vector>

namespace xxz {

// Floats are serialized with 17 significant digits so outputs round-trip
// and identical runs produce byte-identical files.
std::string fmt17(double value);
std::string fmt_complex(std::complex<double> z);

// Minimal JSON emitter with insertion-ordered keys and fmt17 numbers.
class JsonWriter {
public:
    std::string str() const { return out_; }

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(const std::string& s);
    JsonWriter& value(const char* s);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(bool b);
    JsonWriter& null();
    JsonWriter& complex_pair(std::complex<double> z);  // [re, im]

private:
    void separator();
    std::string out_;
    std::vector<bool> needs_comma_;
    bool pending_key_ = false;
};

std::string json_escape(const std::string& s);

// Writes via a temp file in the same directory plus rename.
void atomic_write(const std::string& path, const std::string& content);

// "1.5", "1.5+0.25i", "2i", "1-i"
std::complex<double> parse_complex(const std::string& text);

std::vector<int> parse_int_list(const std::string& text);  // comma separated

// "MIN:MAX"
std::pair<int, int> parse_window(const std::string& text);

}  // namespace xxz

#endif
