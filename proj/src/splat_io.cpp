#include "beings/splat_io.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace beings {

namespace {

constexpr double kShC0 = 0.28209479177387814;  // 1 / (2*sqrt(pi))

const char* kRequired[14] = {"x",       "y",       "z",       "scale_0", "scale_1",
                             "scale_2", "rot_0",   "rot_1",   "rot_2",   "rot_3",
                             "opacity", "f_dc_0",  "f_dc_1",  "f_dc_2"};

struct PlyLayout {
    std::size_t vertex_count = 0;
    std::size_t stride = 0;                 // bytes per record
    std::map<std::string, std::size_t> offsets;  // property name -> byte offset
};

std::size_t property_size(const std::string& type) {
    if (type == "float" || type == "float32" || type == "int" || type == "int32" ||
        type == "uint" || type == "uint32")
        return 4;
    if (type == "double" || type == "float64") return 8;
    if (type == "char" || type == "uchar" || type == "int8" || type == "uint8") return 1;
    if (type == "short" || type == "ushort" || type == "int16" || type == "uint16") return 2;
    throw std::runtime_error("splat ply: unsupported property type '" + type + "'");
}

PlyLayout parse_header(std::istream& in, const std::string& path) {
    std::string line;
    if (!std::getline(in, line) || line != "ply")
        throw std::runtime_error(path + ": not a PLY file");
    PlyLayout layout;
    bool in_vertex = false;
    bool format_ok = false;
    std::map<std::string, std::string> types;
    while (std::getline(in, line)) {
        std::istringstream iss(line);
        std::string tok;
        iss >> tok;
        if (tok == "format") {
            std::string fmt;
            iss >> fmt;
            if (fmt != "binary_little_endian")
                throw std::runtime_error(path + ": only binary_little_endian PLY is supported");
            format_ok = true;
        } else if (tok == "comment") {
            continue;
        } else if (tok == "element") {
            std::string name;
            std::size_t count;
            iss >> name >> count;
            if (name == "vertex") {
                layout.vertex_count = count;
                in_vertex = true;
            } else {
                if (in_vertex) in_vertex = false;
                if (count != 0)
                    throw std::runtime_error(path + ": unsupported non-vertex element '" + name + "'");
            }
        } else if (tok == "property") {
            if (!in_vertex) continue;
            std::string type, name;
            iss >> type >> name;
            if (type == "list") throw std::runtime_error(path + ": list properties unsupported");
            layout.offsets[name] = layout.stride;
            types[name] = type;
            layout.stride += property_size(type);
        } else if (tok == "end_header") {
            if (!format_ok) throw std::runtime_error(path + ": missing format line");
            for (const char* req : kRequired) {
                auto it = layout.offsets.find(req);
                if (it == layout.offsets.end())
                    throw std::runtime_error(path + ": missing required property '" +
                                             std::string(req) + "'");
                const std::string& t = types[req];
                if (t != "float" && t != "float32")
                    throw std::runtime_error(path + ": property '" + std::string(req) +
                                             "' must be float32");
            }
            return layout;
        }
    }
    throw std::runtime_error(path + ": truncated header");
}

float read_f32(const char* base, std::size_t offset) {
    float v;
    std::memcpy(&v, base + offset, sizeof(float));
    return v;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

std::vector<Gaussian3D> load_splats(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open splat file: " + path);
    const PlyLayout layout = parse_header(in, path);

    std::vector<Gaussian3D> out;
    out.reserve(layout.vertex_count);
    std::vector<char> record(layout.stride);
    for (std::size_t i = 0; i < layout.vertex_count; ++i) {
        in.read(record.data(), static_cast<std::streamsize>(layout.stride));
        if (in.gcount() != static_cast<std::streamsize>(layout.stride))
            throw std::runtime_error(path + ": truncated at record " + std::to_string(i));
        auto f = [&](const char* name) { return read_f32(record.data(), layout.offsets.at(name)); };

        Gaussian3D g;
        g.mean = Vec3(f("x"), f("y"), f("z"));
        g.scale = Vec3(std::exp(double(f("scale_0"))), std::exp(double(f("scale_1"))),
                       std::exp(double(f("scale_2"))));
        const double qw = f("rot_0"), qx = f("rot_1"), qy = f("rot_2"), qz = f("rot_3");
        const double qn = std::sqrt(qw * qw + qx * qx + qy * qy + qz * qz);
        if (!std::isfinite(qn) || qn < 1e-12)
            throw std::runtime_error(path + ": record " + std::to_string(i) +
                                     ": degenerate quaternion");
        g.rotation = Eigen::Quaterniond(qw / qn, qx / qn, qy / qn, qz / qn);
        g.opacity = sigmoid(f("opacity"));
        for (int c = 0; c < 3; ++c) {
            const double v = 0.5 + kShC0 * double(f(kRequired[11 + c]));
            g.color[c] = static_cast<float>(std::clamp(v, 0.0, 1.0));
        }
        try {
            validate_gaussian(g, static_cast<int>(i));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
        out.push_back(g);
    }
    return out;
}

void save_splats(const std::string& path, const std::vector<Gaussian3D>& splats) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write splat file: " + path);
    out << "ply\nformat binary_little_endian 1.0\n"
        << "element vertex " << splats.size() << "\n";
    for (const char* name : kRequired) out << "property float " << name << "\n";
    out << "end_header\n";
    for (const auto& g : splats) {
        std::array<float, 14> rec;
        rec[0] = float(g.mean.x());
        rec[1] = float(g.mean.y());
        rec[2] = float(g.mean.z());
        for (int c = 0; c < 3; ++c) rec[3 + c] = float(std::log(g.scale[c]));
        rec[6] = float(g.rotation.w());
        rec[7] = float(g.rotation.x());
        rec[8] = float(g.rotation.y());
        rec[9] = float(g.rotation.z());
        const double a = std::clamp(g.opacity, 1e-6, 1.0 - 1e-6);
        rec[10] = float(std::log(a / (1.0 - a)));
        for (int c = 0; c < 3; ++c) rec[11 + c] = float((double(g.color[c]) - 0.5) / kShC0);
        out.write(reinterpret_cast<const char*>(rec.data()), sizeof(rec));
    }
}

}  // namespace beings
