#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowfano/projbundle.hpp"

namespace chowfano {

struct InvariantReport {
    std::string name;
    std::string computed;
    std::string golden;                // empty when there is no pinned value
    bool match = false;
    bool audited = false;              // discrepancy is analysed, not asserted
    std::vector<std::string> notes;    // non-empty whenever match is false
};

// everything the genus-4 Fano threefold program produces
struct FanoSurfaceResults {
    HilbRing ring;
    HilbElem class_fy;                 // c5(Q) c7(M), normal form, degree 12
    HilbElem class_fy_decomposed;      // same class assembled from the h-graded
                                       // pieces of c7(M) and the h^6 rewrite
    std::map<int, ChowClass> c7m_piece;  // coefficient of h^j in c7(M), pre-reduction
    ChowClass hc5q;                    // the h*c5(Q) base class (= -c6(S^2T*))
    Rat h2, h_sigma1, sigma2, sigma1sq;
    HilbElem c1_tf, c2_tf;
    Rat c1sq, c2num, pa;
    bool noether_integral = false;
    Rat six_nu;
    bool nu_divisible = false;
    long long nu = 0;
    bool nu_routes_agree = false;      // tower evaluation vs pushed-down evaluation
    Rat steiner, steiner_expansion;
};

struct PlanesSurfaceResults {
    GrassContext ctx{3, 7};
    ChowClass cls;                     // c10(S^3 T*)
    Rat sigma2, sigma11, sigma1sq;
    Rat c1sq;
    Rat c2_first_principles, chi, pa;
    bool noether_integral = false;
    Rat c2_via_relation;               // value forced by the arithmetic-genus relation
    Rat c2_via_printed_tangent_line;   // 13*sigma11 - sigma2 with the remark's pairings
};

struct LinesCurveResults {
    GrassContext ctx{2, 6};
    ChowClass cls;                     // c3(S^2T*) c4(S^3T*)
    Rat degree;
    Rat two_g_minus_2;
    bool parity_ok = false;
    Rat genus;
    int codim = 0;
};

FanoSurfaceResults compute_fano_surface();
PlanesSurfaceResults compute_planes_surface();
LinesCurveResults compute_lines_curve();

long long reducible_conics_through_node(long long lines_count);

// report assembly; every entry pairs the computed value with the golden one
std::vector<InvariantReport> fano_genus4_reports(const FanoSurfaceResults& r);
std::vector<InvariantReport> cubic5_planes_reports(const PlanesSurfaceResults& p,
                                                   const FanoSurfaceResults& f,
                                                   const LinesCurveResults& l);
std::vector<InvariantReport> lines_curve_reports(const LinesCurveResults& r);

// the displayed arithmetic-genus relation, optionally with a substituted genus
// (the negative-control path feeds a wrong genus and must report a mismatch)
InvariantReport pa_relation_report(const Rat& pa_fy, const Rat& pa_f2z, const Rat& genus);

bool any_hard_mismatch(const std::vector<InvariantReport>& reports);

std::string reports_to_json(const std::vector<InvariantReport>& reports,
                            const std::string& command, std::uint64_t seed);
std::string reports_to_markdown(const std::vector<InvariantReport>& reports,
                                const std::string& command);

}  // namespace chowfano
