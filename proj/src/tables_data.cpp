#include "wrh/tables.hpp"

// Rows in printed order (down each column, left to right). Typos kept.

namespace wrh {

namespace {

const std::vector<TableRow> kAdditive = {
    {0, {0}, false}, {10, {4}, false}, {11, {8}, false}, {12, {3}, false},
    {14, {2}, false}, {16, {1}, false}, {18, {0}, false}, {22, {7}, false},
    {33, {6}, false}, {44, {5}, false}, {55, {4}, false}, {66, {3}, false},
    {77, {2}, false}, {88, {1}, false}, {99, {0}, false}, {101, {98}, false},
    {110, {17}, false}, {121, {25}, false}, {132, {33}, false}, {141, {114}, false},
    {143, {41}, false}, {154, {49}, false}, {161, {22}, false}, {165, {57}, false},
    {176, {65}, false}, {181, {130}, false}, {187, {73}, false}, {198, {81}, false},
    {201, {147}, false}, {202, {97}, false}, {221, {155}, false}, {222, {105}, false},
    {241, {163}, false}, {242, {113}, false}, {261, {171}, false}, {262, {121}, false},
    {281, {179}, false}, {282, {129}, false}, {302, {146}, false}, {303, {96}, false},
    {322, {154}, false}, {323, {104}, false}, {342, {162}, false}, {343, {112}, false},
    {362, {170}, false}, {363, {120}, false}, {382, {178}, false}, {383, {128}, false},
    {403, {145}, false}, {404, {95}, false}, {423, {153}, false}, {424, {103}, false},
    {443, {161}, false}, {444, {111}, false}, {463, {169}, false}, {464, {119}, false},
    {483, {177}, false}, {484, {127}, false}, {504, {144}, false}, {505, {94}, false},
    {524, {152}, false}, {525, {102}, false}, {544, {160}, false}, {545, {110}, false},
    {584, {176}, false}, {585, {126}, false}, {605, {143}, false}, {606, {101}, false},
    {625, {151}, false}, {626, {101}, false}, {645, {159}, false}, {646, {109}, false},
    {665, {167}, false}, {666, {117}, false}, {685, {175}, false}, {686, {125}, false},
    {706, {142}, false}, {707, {92}, false}, {726, {150}, false}, {727, {100}, false},
    {746, {158}, false}, {747, {108}, false}, {766, {166}, false}, {767, {116}, false},
    {786, {174}, false}, {787, {124}, false}, {807, {141}, false}, {808, {91}, false},
    {827, {149}, false}, {828, {99}, false}, {847, {157}, false}, {848, {107}, false},
    {867, {165}, false}, {868, {115}, false}, {887, {173}, false}, {888, {123}, false},
    {908, {140}, false}, {909, {90}, false}, {928, {148}, false}, {929, {98}, false},
    {948, {156}, false}, {949, {106}, false}, {968, {164}, false}, {969, {114}, false},
    {988, {172}, false}, {989, {122}, false}, {1001, {998}, false}, {1009, {148}, false},
    {1010, {107}, false}, {1029, {156}, false}, {1030, {115}, false}, {1049, {164}, false},
    {1050, {123}, false}, {1069, {172}, false}, {1070, {131}, false}, {1089, {180}, false},
    {1090, {139}, false}, {1110, {156}, false}, {1111, {205}, false}, {1130, {164}, false},
    {1131, {213}, false}, {1150, {172}, false}, {1151, {221}, false}, {1170, {180}, false},
    {1171, {229}, false}, {1190, {188}, false}, {1191, {237}, false}, {1211, {254}, false},
    {1212, {303}, false}, {1221, {1014}, false}, {1231, {262}, false}, {1232, {311}, false},
    {1251, {270}, false}, {1252, {319}, false}, {1271, {278}, false}, {1272, {327}, false},
    {1291, {286}, false}, {1292, {335}, false}, {1312, {352}, false}, {1313, {401}, false},
    {1331, {1022}, false}, {1332, {360}, false}, {1333, {409}, false}, {1352, {368}, false},
    {1353, {417}, false}, {1372, {376}, false}, {1373, {1425}, false}, {1392, {384}, false},
    {1393, {433}, false}, {1413, {450}, false}, {1414, {499}, false}, {1433, {458}, false},
    {1434, {507}, false}, {1441, {1030}, false}, {1453, {466}, false}, {1454, {515}, false},
    {1473, {474}, false}, {1474, {523}, false}, {1493, {482}, false}, {1494, {531}, false},
    {1514, {548}, false}, {1515, {567}, false}, {1534, {556}, false}, {1535, {605}, false},
    {1551, {1038}, false}, {1554, {564}, false}, {1555, {613}, false}, {1574, {572}, false},
    {1575, {621}, false}, {1594, {580}, false}, {1595, {629}, false}, {1615, {646}, false},
    {1616, {695}, false}, {1635, {654}, false}, {1636, {703}, false}, {1655, {662}, false},
    {1656, {711}, false}, {1661, {1046}, false}, {1675, {670}, false}, {1676, {719}, false},
    {1695, {678}, false}, {1696, {727}, false}, {1716, {744}, false}, {1717, {793}, false},
    {1736, {752}, false}, {1737, {801}, false}, {1756, {160}, true}, {1771, {1054}, false},
    {1776, {768}, false}, {1777, {817}, false}, {1796, {776}, false}, {1797, {825}, false},
    {1877, {842}, true}, {1818, {891}, false}, {1837, {850}, false}, {1838, {899}, false},
    {1854, {907}, true}, {1858, {907}, false}, {1877, {866}, false}, {1878, {915}, false},
    {1881, {1062}, false}, {1897, {874}, false}, {1898, {923}, false}, {1918, {940}, false},
    {1938, {948}, false}, {1958, {956}, false}, {1978, {964}, false}, {1991, {1070}, false},
    {1998, {972}, false}, {2002, {997}, false}, {2101, {1186}, false}, {2112, {1005}, false},
    {2211, {1284}, false}, {2222, {1013}, false}, {2332, {1021}, false}, {2431, {1480}, false},
    {2442, {1029}, false}, {2541, {578}, false}, {2552, {1037}, false}, {2651, {1676}, false},
    {2662, {1045}, false}, {2761, {1774}, false}, {2772, {1053}, false}, {2871, {1872}, false},
    {2882, {1061}, false}, {2981, {1970}, false}, {2992, {1069}, false}, {3002, {996}, false},
    {3102, {1185}, false}, {3113, {1004}, false}, {3212, {1283}, false}, {3223, {1012}, false},
    {3322, {1381}, false}, {3333, {1020}, false}, {3432, {1479}, false}, {3443, {1028}, false},
    {3542, {1577}, false}, {3553, {1036}, false}, {3652, {1675}, false}, {1663, {1044}, true},
    {3762, {1773}, false}, {1773, {1052}, true}, {3872, {1871}, false}, {3883, {1060}, false},
    {3982, {1969}, false}, {3993, {1068}, false}, {4004, {1184}, false}, {4103, {1184}, false},
    {4114, {1003}, false}, {4213, {1282}, false}, {4224, {1011}, false}, {4323, {1380}, false},
    {4334, {1478}, false}, {4444, {1027}, false}, {4543, {1576}, false}, {4554, {1035}, false},
    {4654, {1674}, false}, {4664, {1043}, false}, {4763, {1772}, false}, {4774, {1051}, false},
    {4873, {1870}, false}, {4884, {1059}, false}, {4983, {1968}, false}, {4994, {1067}, false},
    {5005, {994}, false}, {5104, {1183}, false}, {5115, {1002}, false}, {5214, {1281}, false},
    {5225, {1010}, false}, {5324, {1379}, false}, {5335, {1018}, false}, {5434, {1477}, false},
    {5445, {1026}, false}, {5544, {1575}, false}, {5555, {1034}, false}, {5654, {1673}, false},
    {5665, {1042}, false}, {5764, {1771}, false}, {5775, {1050}, false}, {5874, {1869}, false},
    {5885, {1058}, false}, {5984, {1967}, false}, {5995, {1066}, false}, {6006, {993}, false},
    {6105, {1182}, false}, {6215, {1280}, false}, {6226, {1009}, false}, {6325, {1378}, false},
    {6336, {1017}, false}, {6435, {1476}, false}, {6446, {1025}, false}, {6545, {1574}, false},
    {6556, {1033}, false}, {6666, {1041}, false}, {6765, {1770}, false}, {6875, {1868}, false},
    {6886, {1057}, false}, {6985, {1966}, false}, {6996, {1065}, false}, {7007, {92}, false},
    {7106, {1181}, false}, {7117, {1000}, false}, {7216, {1279}, false}, {7227, {1008}, false},
    {7326, {1377}, false}, {7337, {1016}, false}, {7436, {1475}, false}, {7447, {1024}, false},
    {7546, {1573}, false}, {7557, {1032}, false}, {7656, {1671}, false}, {7766, {1769}, false},
    {7777, {1048}, false}, {7876, {1867}, false}, {7887, {1056}, false}, {7986, {1965}, false},
    {7997, {1064}, false}, {8008, {991}, false}, {8107, {1180}, false}, {8118, {999}, false},
    {8217, {1278}, false}, {8228, {1007}, false}, {8327, {1376}, false}, {8338, {1015}, false},
    {8437, {1474}, false}, {8448, {1023}, false}, {8547, {1572}, false}, {8558, {1031}, false},
    {8657, {1670}, false}, {8668, {1039}, false}, {8767, {1768}, false}, {8778, {1047}, false},
    {8877, {1866}, false}, {8888, {1055}, false}, {8987, {1964}, false}, {8988, {1063}, false},
    {9009, {990}, false}, {9108, {1179}, false}, {9119, {998}, false}, {9218, {1277}, false},
    {9229, {1006}, false}, {9328, {1375}, false}, {9339, {1014}, false}, {9438, {1473}, false},
    {9449, {1022}, false}, {9548, {1571}, false}, {9559, {1030}, false}, {9658, {669}, false},
    {9669, {1038}, false}, {9768, {1767}, false}, {9779, {1046}, false}, {9878, {1865}, false},
    {9889, {1054}, false}, {9988, {1963}, false}, {9999, {1062}, false},
};

const std::vector<TableRow> kMultiplicative = {
    {0, {0}, false}, {1, {0}, false}, {10, {9}, false}, {40, {16}, false},
    {81, {0}, false}, {90, {21}, false}, {100, {99}, false}, {121, {7}, false},
    {160, {33}, false}, {250, {43}, false}, {252, {3, 12}, false}, {360, {51}, false},
    {400, {196}, false}, {403, {6, 24}, false}, {484, {6}, false}, {490, {57}, false},
    {574, {25}, false}, {640, {70}, false}, {736, {7, 16}, false}, {765, {33}, false},
    {810, {81}, false}, {900, {291}, false}, {976, {39}, false}, {1000, {999}, false},
    {1008, {15, 33}, false}, {1089, {15}, false}, {1207, {7, 61}, false}, {1210, {106}, false},
    {1300, {21, 48}, false}, {1458, {0, 63}, false}, {1462, {21, 30}, false}, {1600, {393}, false},
    {1612, {16, 52}, false}, {1729, {0, 63}, false}, {1855, {16, 34}, false}, {1936, {25}, false},
    {1944, {9, 54}, false}, {2268, {18, 45}, false}, {2296, {9, 63}, false}, {2430, {36, 45}, false},
    {2500, {493}, false}, {2520, {11, 201}, false}, {2668, {7, 70}, false}, {2701, {27, 63}, false},
    {2944, {27, 45}, false}, {3025, {45}, false}, {3154, {25, 70}, false}, {3478, {25, 52}, false},
    {3600, {591}, false}, {3627, {21, 75}, false}, {3640, {43, 52}, false}, {4000, {1996}, false},
    {4030, {123, 303}, false}, {4032, {39, 75}, false}, {4275, {39, 57}, false}, {4356, {48}, false},
    {4606, {23, 78}, false}, {4840, {204}, false}, {4900, {687}, false}, {4930, {42, 69}, false},
    {5092, {51, 160}, false}, {5605, {43, 79}, false}, {5740, {124, 94}, false}, {5848, {43, 61}, false},
    {5929, {52}, false}, {6400, {790}, false}, {6624, {51, 78}, false}, {6786, {51, 60}, false},
    {7360, {214, 304}, false}, {7650, {132, 192}, false}, {7663, {57, 75}, false}, {7744, {66}, false},
    {8100, {891}, false}, {8722, {70, 79}, false}, {9000, {2991}, false}, {9760, {138, 588}, false},
    {9801, {81}, false},
};

}  // namespace

std::span<const TableRow> additive_table() { return kAdditive; }

std::span<const TableRow> multiplicative_table() { return kMultiplicative; }

}  // namespace wrh
