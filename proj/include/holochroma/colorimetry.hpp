#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

#include "holochroma/image.hpp"

namespace holochroma::colorimetry {

struct Tristimulus {
    double X = 0.0, Y = 0.0, Z = 0.0;

    Eigen::Vector3d vec() const { return {X, Y, Z}; }
    static Tristimulus from(const Eigen::Vector3d& v) { return {v[0], v[1], v[2]}; }
};

struct Chromaticity {
    double x = 0.0, y = 0.0;
};

/// Sampled spectral power distribution. Wavelengths must be strictly
/// increasing, powers nonnegative, and the sampling interval positive.
struct Spectrum {
    std::vector<double> wavelength_nm;
    std::vector<double> power;
    double interval_nm = 1.0;

    void validate() const;
    static Spectrum load_csv(const std::string& path);
};

/// CIE 1931 2-degree observer color matching functions, sampled at 1 nm.
/// Off-grid wavelengths are evaluated by linear interpolation.
class CmfTable {
public:
    static CmfTable load_csv(const std::string& path);

    double min_wavelength() const { return wavelength_.front(); }
    double max_wavelength() const { return wavelength_.back(); }
    size_t size() const { return wavelength_.size(); }

    /// (xbar, ybar, zbar) at an arbitrary in-range wavelength.
    Eigen::Vector3d lookup(double wavelength_nm) const;

    const std::vector<double>& wavelengths() const { return wavelength_; }
    const std::vector<double>& xbar() const { return xbar_; }
    const std::vector<double>& ybar() const { return ybar_; }
    const std::vector<double>& zbar() const { return zbar_; }

private:
    std::vector<double> wavelength_, xbar_, ybar_, zbar_;
    void validate() const;
};

/// Calibrated RGB color space: primaries, white point and the derived
/// RGB<->XYZ matrices (white-scaled so that RGB (1,1,1) maps to the white
/// point exactly).
struct ColorSpace {
    std::string name;
    std::array<Tristimulus, 3> primaries_xyz;  // r, g, b
    Tristimulus white_point;
    Eigen::Matrix3d rgb_to_xyz = Eigen::Matrix3d::Identity();
    Eigen::Matrix3d xyz_to_rgb = Eigen::Matrix3d::Identity();

    std::string to_json() const;
    static ColorSpace from_json(const std::string& text);
    void save(const std::string& path) const;
    static ColorSpace load(const std::string& path);
};

/// Reference to either a calibrated space or raw CIE XYZ, for transforms
/// where one side has no RGB matrix.
struct SpaceRef {
    const ColorSpace* cs = nullptr;  // null means XYZ

    SpaceRef() = default;
    SpaceRef(const ColorSpace& s) : cs(&s) {}
    static SpaceRef xyz() { return SpaceRef(); }
    bool is_xyz() const { return cs == nullptr; }
    std::string tag() const { return is_xyz() ? "XYZ" : cs->name; }
    Tristimulus white() const;
};

struct LabColor {
    double L = 0.0, a = 0.0, b = 0.0;
    Tristimulus reference_white;
};

enum class TransferCurve { Srgb, Prophoto, Linear };
enum class DeltaEMethod { Ciede2000, Cie76 };

// --- spectral integration and chromaticity ---

/// Discrete tristimulus integration of a spectrum against the observer
/// functions: X = sum(P_i * xbar_i) * dLambda, likewise Y and Z.
Tristimulus spd_to_xyz(const Spectrum& s, const CmfTable& cmf);

Chromaticity chromaticity_of(const Tristimulus& t);

// --- color space construction and transformation ---

ColorSpace build_color_space(const std::array<Tristimulus, 3>& primaries,
                             const Tristimulus& white, const std::string& name);
ColorSpace build_color_space(const std::array<Spectrum, 3>& primaries,
                             const CmfTable& cmf, const Tristimulus& white,
                             const std::string& name);
/// Convenience: primaries given as chromaticity coordinates (unit-Y tristimulus).
ColorSpace build_color_space(const std::array<Chromaticity, 3>& primaries,
                             const Tristimulus& white, const std::string& name);

/// Bradford chromatic adaptation matrix taking XYZ relative to src_white
/// to XYZ relative to dst_white.
Eigen::Matrix3d bradford_adaptation(const Tristimulus& src_white,
                                    const Tristimulus& dst_white);

/// The 3x3 matrix applied per pixel by cst(). Adaptation is identity when
/// white points agree to 1e-12 relative.
Eigen::Matrix3d cst_matrix(const SpaceRef& src, const SpaceRef& dst);

/// Linear color space transformation. No gamut handling happens here;
/// out-of-range destination values pass through untouched.
LinearImage cst(const LinearImage& img, const SpaceRef& src, const SpaceRef& dst);

// --- Lab and color difference ---

LabColor xyz_to_lab(const Tristimulus& t, const Tristimulus& white);
Tristimulus lab_to_xyz(const LabColor& lab);

double delta_e_2000(const LabColor& a, const LabColor& b);
double delta_e_76(const LabColor& a, const LabColor& b);
double delta_e(const LabColor& a, const LabColor& b,
               DeltaEMethod method = DeltaEMethod::Ciede2000);

// --- gamut mapping ---

/// Largest chroma at (L, hue) whose corresponding dst RGB stays inside
/// [0,1], found by bisection along the constant-(L,h) ray.
double gamut_boundary_chroma(double L, double hue_radians, const ColorSpace& dst,
                             double tolerance = 1e-7);

/// Soft chroma compression into the destination gamut in L*C*h, preserving
/// L and hue. Chroma at or below the gamut boundary is left untouched
/// (hence the map is idempotent); out-of-gamut chroma lands smoothly in
/// the (knee*boundary, boundary) band through a tanh curve.
LinearImage gamut_map_chroma(const LinearImage& img, const ColorSpace& dst,
                             double knee = 0.8, double strength = 1.0);

// --- transfer curves ---

double decode_transfer(double encoded, TransferCurve curve);
LinearImage linearize(const LinearImage& encoded, TransferCurve curve);
TransferCurve transfer_curve_from_name(const std::string& name);

// --- stock data ---

Tristimulus d65_white();
Tristimulus d50_white();
ColorSpace srgb_space();
ColorSpace prophoto_space();

}  // namespace holochroma::colorimetry
