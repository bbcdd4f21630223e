// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/surrogate/model_io.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "irsthz/specfun/errors.hpp"
#include "irsthz/util/hash.hpp"

namespace irsthz
{
namespace
{
std::string hex(double v)
{
    return Fnv1a::to_hex(std::bit_cast<std::uint64_t>(v));
}

double unhex(std::string const& s)
{
    if (s.size() != 16)
        throw ModelFormatError("model: malformed value '" + s + "'");
    std::uint64_t bits = 0;
    for (char c : s)
    {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else
            throw ModelFormatError("model: malformed value '" + s + "'");
        bits = (bits << 4) | static_cast<std::uint64_t>(d);
    }
    return std::bit_cast<double>(bits);
}

// Line-oriented reader with keyword checks
class Reader
{
  public:
    explicit Reader(std::string const& text) : in_(text) {}

    std::istringstream line(std::string const& keyword)
    {
        std::string l;
        if (!std::getline(in_, l))
            throw ModelFormatError("model: unexpected end of file, expected '"
                                   + keyword + "'");
        ++line_no_;
        std::istringstream ss(l);
        std::string k;
        ss >> k;
        if (k != keyword)
            throw ModelFormatError("model: line " + std::to_string(line_no_)
                                   + ": expected '" + keyword + "', found '"
                                   + k + "'");
        return ss;
    }

  private:
    std::istringstream in_;
    int line_no_ = 0;
};

std::vector<double> read_values(std::istringstream& ss, std::size_t n)
{
    std::vector<double> v;
    std::string tok;
    while (ss >> tok)
        v.push_back(unhex(tok));
    if (v.size() != n)
        throw ModelFormatError("model: expected " + std::to_string(n)
                               + " values, found " + std::to_string(v.size()));
    return v;
}
}  // namespace

std::string serialize_model(MlpModel const& m)
{
    m.validate();
    std::ostringstream out;
    out << "irsthz-mlp " << model_format_major << '.' << model_format_minor
        << '\n';
    out << "layers";
    for (int s : m.spec.layer_sizes)
        out << ' ' << s;
    out << "\ninput_transforms";
    for (auto t : m.input_transforms)
        out << ' ' << to_string(t);
    out << "\noutput_transform " << to_string(m.output_transform) << '\n';
    auto write_vec = [&](char const* key, std::vector<double> const& v) {
        out << key;
        for (double x : v)
            out << ' ' << hex(x);
        out << '\n';
    };
    write_vec("input_lo", m.input_scaling.lo);
    write_vec("input_hi", m.input_scaling.hi);
    write_vec("output_lo", m.output_scaling.lo);
    write_vec("output_hi", m.output_scaling.hi);
    for (std::size_t l = 0; l < m.weights.size(); ++l)
    {
        auto const& w = m.weights[l];
        out << "weights " << w.rows() << ' ' << w.cols() << '\n';
        for (Eigen::Index i = 0; i < w.rows(); ++i)
        {
            out << "row";
            for (Eigen::Index j = 0; j < w.cols(); ++j)
                out << ' ' << hex(w(i, j));
            out << '\n';
        }
        out << "bias";
        for (Eigen::Index i = 0; i < m.biases[l].size(); ++i)
            out << ' ' << hex(m.biases[l](i));
        out << '\n';
    }
    auto const& md = m.meta;
    out << "meta_mse " << hex(md.train_mse) << ' ' << hex(md.val_mse) << ' '
        << hex(md.test_mse) << '\n';
    out << "meta_epochs " << md.epochs << ' ' << md.best_epoch << '\n';
    out << "meta_seed " << md.seed << '\n';
    out << "meta_data " << (md.data_hash.empty() ? "-" : md.data_hash) << '\n';
    out << "meta_stop " << (md.stop_reason.empty() ? "-" : md.stop_reason)
        << '\n';
    std::string body = out.str();
    return body + "checksum " + fnv1a_hex(body) + '\n';
}

MlpModel deserialize_model(std::string const& text,
                           std::vector<std::string>* warnings)
{
    // Checksum covers everything before the last line
    auto const pos = text.rfind("checksum ");
    if (pos == std::string::npos || (pos > 0 && text[pos - 1] != '\n'))
        throw ModelFormatError("model: checksum line missing (truncated file?)");
    std::string const body = text.substr(0, pos);
    std::string stored = text.substr(pos + 9);
    while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r'))
        stored.pop_back();
    if (stored != fnv1a_hex(body))
        throw ModelFormatError("model: checksum mismatch");

    Reader rd(body);
    MlpModel m;
    {
        auto ss = rd.line("irsthz-mlp");
        std::string ver;
        ss >> ver;
        int major = -1, minor = -1;
        char dot = 0;
        std::istringstream vs(ver);
        vs >> major >> dot >> minor;
        if (dot != '.' || major < 0 || minor < 0)
            throw ModelFormatError("model: malformed version '" + ver + "'");
        if (major != model_format_major)
            throw ModelFormatError("model: unsupported major version "
                                   + std::to_string(major));
        if (minor > model_format_minor && warnings)
            warnings->push_back("model: file minor version "
                                + std::to_string(minor)
                                + " is newer than this reader");
    }
    {
        auto ss = rd.line("layers");
        int s;
        while (ss >> s)
            m.spec.layer_sizes.push_back(s);
        m.spec.validate();
    }
    int const n_in = m.spec.inputs();
    {
        auto ss = rd.line("input_transforms");
        std::string t;
        while (ss >> t)
            m.input_transforms.push_back(parse_input_transform(t));
    }
    {
        auto ss = rd.line("output_transform");
        std::string t;
        ss >> t;
        m.output_transform = parse_output_transform(t);
    }
    {
        auto s1 = rd.line("input_lo");
        m.input_scaling.lo = read_values(s1, n_in);
        auto s2 = rd.line("input_hi");
        m.input_scaling.hi = read_values(s2, n_in);
        auto s3 = rd.line("output_lo");
        m.output_scaling.lo = read_values(s3, 1);
        auto s4 = rd.line("output_hi");
        m.output_scaling.hi = read_values(s4, 1);
    }
    auto const& ls = m.spec.layer_sizes;
    for (std::size_t l = 0; l + 1 < ls.size(); ++l)
    {
        auto ss = rd.line("weights");
        Eigen::Index rows = -1, cols = -1;
        ss >> rows >> cols;
        if (rows != ls[l + 1] || cols != ls[l])
            throw ModelFormatError("model: weight shape mismatch in layer "
                                   + std::to_string(l));
        Eigen::MatrixXd w(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
        {
            auto rs = rd.line("row");
            auto const v = read_values(rs, static_cast<std::size_t>(cols));
            for (Eigen::Index j = 0; j < cols; ++j)
                w(i, j) = v[j];
        }
        auto bs = rd.line("bias");
        auto const bv = read_values(bs, static_cast<std::size_t>(rows));
        m.weights.push_back(std::move(w));
        m.biases.push_back(
            Eigen::Map<Eigen::VectorXd const>(bv.data(), rows));
    }
    {
        auto ss = rd.line("meta_mse");
        auto const v = read_values(ss, 3);
        m.meta.train_mse = v[0];
        m.meta.val_mse = v[1];
        m.meta.test_mse = v[2];
        auto es = rd.line("meta_epochs");
        es >> m.meta.epochs >> m.meta.best_epoch;
        auto sd = rd.line("meta_seed");
        sd >> m.meta.seed;
        auto dh = rd.line("meta_data");
        dh >> m.meta.data_hash;
        if (m.meta.data_hash == "-")
            m.meta.data_hash.clear();
        auto st = rd.line("meta_stop");
        st >> m.meta.stop_reason;
        if (m.meta.stop_reason == "-")
            m.meta.stop_reason.clear();
    }
    try
    {
        m.validate();
    }
    catch (std::exception const& e)
    {
        throw ModelFormatError(std::string("model: ") + e.what());
    }
    return m;
}

void save_model(MlpModel const& model, std::string const& path)
{
    std::string const text = serialize_model(model);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write model '" + path + "'");
    out << text;
    if (!out)
        throw IoError("failed writing model '" + path + "'");
}

MlpModel load_model(std::string const& path, std::vector<std::string>* warnings)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read model '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return deserialize_model(ss.str(), warnings);
}

}  // namespace irsthz
