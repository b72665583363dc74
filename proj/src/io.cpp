#include "striclcs/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace striclcs {

Sequence parse_sequence_text(std::string_view text) {
    // FASTA detection: any line starting with '>'.
    bool fasta = !text.empty() && text.front() == '>';
    if (!fasta) {
        for (std::size_t pos = text.find('\n'); pos != std::string_view::npos;
             pos = text.find('\n', pos + 1)) {
            if (pos + 1 < text.size() && text[pos + 1] == '>') {
                fasta = true;
                break;
            }
        }
    }

    if (!fasta) {
        if (text.ends_with("\r\n")) {
            text.remove_suffix(2);
        } else if (text.ends_with("\n")) {
            text.remove_suffix(1);
        }
        return Sequence::from_bytes(text);
    }

    std::string joined;
    joined.reserve(text.size());
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t eol = text.find('\n', start);
        std::string_view line =
            text.substr(start, eol == std::string_view::npos ? text.size() - start : eol - start);
        if (line.ends_with("\r")) line.remove_suffix(1);
        if (!line.empty() && line.front() != '>') joined.append(line);
        if (eol == std::string_view::npos) break;
        start = eol + 1;
    }
    return Sequence::from_bytes(joined);
}

Sequence read_sequence_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read input file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::runtime_error("I/O error while reading: " + path.string());
    return parse_sequence_text(buffer.str());
}

} // namespace striclcs
