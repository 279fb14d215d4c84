#pragma once

// Reference values frozen from tests/oracles/compute_oracles.py (mpmath, 60+ digits).

#include <complex>

namespace oracle {

using cplx = std::complex<double>;

inline constexpr double gamma_3_7 = 4.1706517837966040301;
inline const cplx gamma_half_plus_i{0.30069461726065581622, -0.42496787943312381261};
inline const cplx gamma_m3_3_p2_5i{-0.00032579613300150256534, -0.00049644868727871745197};
inline const cplx gamma_12_5_m7_25i{15640250.192229431297, 7224780.5889329340615};
inline const cplx gamma_m19_6_p0_3i{2.3487152145310095519e-18, 1.8433157137191413758e-18};
inline const cplx gamma_19_5_p19_5i{-4097684712276.0868289, -1787977549177.1236491};
inline const cplx gamma_0_1_m20i{-2.4907424588333925776e-16, -1.717414975681725618e-14};

inline constexpr double ml_2_1p5_m4 = 0.19831266161222917161;
inline constexpr double ml_2_1p5_m1 = 0.84605678672415291429;
inline constexpr double ml_2_1p5_m2500 = 0.070146447767539853742;
inline constexpr double ml_0p5_1_m50 = 0.0112815362653237725;
inline const cplx ml_1p5_0p7_2m3i{-0.28488960910889692017, -5.5035375687745464968};
inline const cplx ml_0p8_1p2_10i{-0.0034195332154771760299, 0.044617526840128366475};
inline const cplx ml_0p5_1_3p4i{-0.069017359275733461344, 0.087688439086944436614};
inline constexpr double ml_0p7_0p3_m30 = -0.0090547932616185963851;

inline constexpr double g_kernel_half_quarter = 7.4162987092054876737;
inline constexpr double g_kernel_half_quarter_plus_i = 0.15612511870090635238;
inline constexpr double kernel_half_quarter_truncated_1e4 = 7.0163027090388303176;
inline constexpr double h_cos_0p6 = 0.84680990122457720755;
inline const cplx h_cos_0p75_p2p5i{1.1204303236344823319, -1.2709506573702831076};
inline const cplx h_cos_0p9_m5i{-1.2599287402189908923, -0.98883584902872667318};
inline constexpr double mellin_cos_2pi_half = 1.223869792853340654;
inline constexpr double witness_min_h_sin = 0.15454580715169394114;
inline constexpr double witness_min_h_sin2t = 0.16563809485143724459;

} // namespace oracle
