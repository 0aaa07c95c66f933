#pragma once

// Reference coefficients produced by tests/oracle/series_oracle.py, an
// independent exact implementation. Regenerate with tests/oracle/freeze.py.

#include <string>
#include <utility>
#include <vector>

namespace frozen {

/// Right-hand sides of the cataloged identities, q^0..q^30.
inline const std::vector<std::pair<std::string, std::vector<std::string>>> kIdentityRhs = {
    {"prop1.order3.a", {"1", "1", "0", "-1", "1", "1", "-1", "-1", "0", "2", "0", "-2", "1", "1", "-1", "-2", "1", "3", "-1", "-2", "1", "2", "-2", "-3", "1", "4", "0", "-4", "2", "3", "-2"}},
    {"prop1.order3.b", {"1", "1", "1", "1", "2", "2", "2", "3", "3", "4", "5", "5", "6", "7", "8", "9", "11", "12", "13", "16", "17", "19", "22", "24", "27", "31", "34", "37", "42", "46", "51"}},
    {"prop1.order3.c", {"2", "-1", "2", "-2", "2", "-3", "4", "-4", "5", "-6", "6", "-8", "10", "-10", "12", "-14", "15", "-18", "20", "-22", "26", "-29", "32", "-36", "40", "-44", "50", "-56", "60", "-68", "76"}},
    {"prop1.order5.a", {"1", "1", "-1", "1", "0", "0", "-1", "1", "0", "1", "-2", "1", "-1", "2", "-2", "2", "-1", "1", "-3", "2", "-1", "3", "-3", "2", "-2", "3", "-4", "3", "-3", "4", "-5"}},
    {"prop1.order5.b", {"1", "0", "1", "1", "1", "1", "1", "1", "2", "2", "2", "3", "3", "3", "4", "4", "4", "5", "6", "6", "7", "8", "8", "10", "11", "11", "13", "14", "15", "17", "18"}},
    {"prop1.order5.c", {"1", "0", "1", "-1", "1", "-1", "2", "-2", "1", "-1", "2", "-2", "2", "-2", "2", "-3", "3", "-2", "3", "-4", "4", "-4", "4", "-5", "5", "-4", "5", "-6", "6", "-6", "7"}},
    {"prop1.order5.d", {"1", "0", "0", "0", "1", "1", "1", "1", "1", "1", "1", "1", "2", "2", "2", "3", "3", "3", "4", "4", "4", "5", "5", "5", "7", "7", "7", "9", "9", "10", "12"}},
    {"prop2.order3.a", {"1", "1", "-2", "3", "-3", "3", "-5", "7", "-6", "6", "-10", "12", "-11", "13", "-17", "20", "-21", "21", "-27", "34", "-33", "36", "-46", "51", "-53", "58", "-68", "78", "-82", "89", "-104"}},
    {"prop2.order3.b", {"1", "1", "1", "0", "0", "0", "1", "1", "0", "0", "-1", "0", "1", "1", "1", "-1", "0", "0", "0", "1", "0", "0", "-1", "0", "1", "1", "1", "0", "-1", "-1", "1"}},
    {"prop2.order3.c", {"1", "2", "3", "4", "6", "8", "10", "14", "18", "22", "29", "36", "44", "56", "68", "82", "101", "122", "146", "176", "210", "248", "296", "350", "410", "484", "566", "660", "772", "896", "1038"}},
    {"prop2.order3.d", {"1", "-1", "0", "1", "0", "-1", "1", "-1", "0", "1", "-1", "0", "2", "-1", "-1", "1", "-1", "-1", "2", "-1", "0", "2", "-1", "-1", "2", "-2", "-1", "3", "-2", "-1", "3"}},
    {"prop3.order7.a", {"1", "1", "0", "1", "1", "1", "0", "2", "1", "2", "1", "2", "1", "3", "2", "3", "3", "3", "2", "5", "3", "5", "4", "6", "5", "7", "5", "7", "7", "9", "7"}},
    {"prop3.order7.b", {"0", "1", "1", "1", "2", "1", "2", "2", "2", "3", "3", "2", "4", "4", "4", "4", "6", "5", "6", "6", "7", "8", "9", "8", "10", "11", "11", "12", "14", "13", "16"}},
    {"prop3.order7.c", {"1", "1", "2", "1", "2", "2", "3", "2", "3", "3", "4", "4", "5", "4", "6", "5", "7", "7", "8", "8", "10", "9", "11", "11", "13", "13", "16", "15", "17", "18", "21"}},
};

/// lambda -> +1 in the first order-3 identity.
inline constexpr long kNegativeControlExp = 3;
inline const std::string kNegativeControlLhs = "1";
inline const std::string kNegativeControlRhs = "-1";

/// Expansion of the first order-3 model to q^10.
inline const std::vector<std::string> kOrder3aTo10 = {"1", "1", "0", "-1", "1", "1", "-1", "-1", "0", "2", "0"};

/// 0phi0 with z = q, q^0..q^20 (Euler: prod (1 - q^n)).
inline const std::vector<std::string> kEuler = {"1", "-1", "-1", "0", "0", "1", "0", "1", "0", "0", "0", "0", "-1", "0", "0", "-1", "0", "0", "0", "0", "0"};

/// r phi s at the fixed r=1, s=1 parameters, q^0..q^20.
inline const std::vector<std::string> kPhi_r1s1 = {"1", "-2/3", "-2/3", "4/3", "-1", "13/6", "-27/4", "89/24", "-89/48", "-359/96", "2951/192", "-583/384", "-1235/256", "-263/1536", "75911/3072", "-384391/6144", "282247/12288", "-386183/24576", "1450631/49152", "-848429/32768", "-2204115/65536"};

/// r phi s at the fixed r=2, s=1 parameters, q^0..q^20.
inline const std::vector<std::string> kPhi_r2s1 = {"1", "0", "14/45", "14/45", "14/75", "-392/675", "-1358/375", "-53816/3375", "-121814/1875", "-13190114/50625", "-87888598/84375", "-1053778852/253125", "-21064796312/1265625", "-28077486332/421875", "-5053184633728/18984375", "-2245668638486/2109375", "-404204638250294/94921875", "-538928041080184/31640625", "-32335370499412162/474609375", "-129340798252890896/474609375", "-7760429415253228028/7119140625"};

/// r phi s at the fixed r=1, s=2 parameters, q^0..q^20.
inline const std::vector<std::string> kPhi_r1s2 = {"1", "-1/16", "-1/16", "-1/16", "-3/32", "-23/384", "-119/576", "-37/1728", "-391/648", "6709/31104", "-376385/186624", "829955/559872", "-48195149/6718464", "74116855/10077696", "-1592008343/60466176", "6049989635/181398528", "-26915384647/272097792", "235064009573/1632586752", "-1850194586579/4897760256", "17805653950369/29386561536", "-128841031059415/88159684608"};

}  // namespace frozen
