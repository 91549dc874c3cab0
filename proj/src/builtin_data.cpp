#include "abfold/benchmark.hpp"

#include <algorithm>
#include <cctype>

namespace abfold {

namespace {

// Published best conformations, degrees, bond angles first.
constexpr double kP1BXP[] = {
    43.2915, 2.8817, -48.7280, 0.0655, 12.6242, 66.0927,
    -6.4080, 8.9633, 8.8002, 2.2354, 74.0763, 6.6206,
    -1.3180, 104.0990, -160.3410, 177.3840, 20.6892, -26.8003,
    -127.7890, -166.2700, -10.2979,
};
constexpr double kP1CB3[] = {
    -14.0758, 25.2546, -38.7358, -9.5809, 21.0366, 14.7617,
    -0.9982, 21.5393, 71.2738, -27.6012, -5.1652, 19.1483,
    149.7748, -172.5398, -178.0861, -178.1643, -91.6772, -4.8545,
    31.1093, -28.9806, -3.4154,
};
constexpr double kP1BXL[] = {
    -22.4292, -32.2737, -16.9254, 5.8130, 15.6175, 26.9979,
    -38.2372, 52.8361, -48.2442, -24.0736, 49.3335, -36.1178,
    13.9215, 12.5486, -1.9187, -55.1452, -147.3023, 127.6298,
    -168.5915, 62.9624, 27.0891, -28.7221, -27.4283, -152.1219,
    177.1523, -67.7357, 5.2122,
};
constexpr double kP1EDP[] = {
    -22.6336, 7.2697, 60.7674, 23.9360, -50.4261, 4.4167,
    11.4886, 46.4990, 13.2306, -12.2668, 22.7087, 4.0704,
    30.6245, -69.1251, 16.9542, -26.0209, -124.9106, 155.5754,
    61.0880, -1.5508, -53.7379, -159.4210, 162.5922, 156.4397,
    170.4986, 85.1224, -2.3633, 25.7677, -67.3571,
};
constexpr double kP2ZNF[] = {
    -22.5120, 7.7169, -75.1038, 26.0694, 35.5390, 19.6450,
    6.7395, 21.8104, -57.4641, 1.6924, 6.1557, 3.0890,
    9.8979, 23.8155, -48.9192, -4.3139, -78.7078, -2.6658,
    114.9430, 148.1870, 162.5640, 79.1176, -8.8776, 178.4280,
    -42.9368, -15.8392, 18.6691, 104.1930, -166.4600, -12.8760,
    -140.1070,
};
constexpr double kP1EDN[] = {
    -23.2048, 31.2207, 46.7641, 48.9338, -43.6867, -28.0164,
    -17.6723, -38.3711, -25.1772, 10.6263, 9.0775, 33.5365,
    -4.8376, -6.0992, 25.0580, -81.1510, 15.5945, -3.6247,
    -36.6783, -41.0025, -127.4610, 147.7320, 53.6249, 22.4103,
    68.6344, 166.9730, -147.0280, 171.4510, 155.3810, -121.7100,
    -29.6786, -131.1440, -15.2983, -24.5428, 54.7787, 83.2637,
    29.6805,
};
constexpr double kP2H3S[] = {
    30.6395, -51.1362, 34.4028, -0.4102, -32.4389, -10.4102,
    -2.0940, 12.4798, -5.7420, -60.0843, 12.6704, -8.6855,
    -36.5963, -14.4828, -17.9173, 13.0795, 0.1480, 17.7335,
    -6.0652, 1.4640, -69.7022, 3.0362, 36.2347, 57.1061,
    174.6790, -173.2560, 170.6800, 156.7240, -142.5800, -40.6316,
    -22.5668, 1.4454, -175.8490, 114.8180, 61.1893, 4.1128,
    27.6809, -84.4735, -144.8670, -176.7310, -161.6050, 97.3255,
    158.1730, -113.2250, -54.3451,
};
constexpr double kP1ARE[] = {
    -11.8099, -0.1852, -16.2623, -42.0892, 19.1083, -4.8901,
    14.4563, 26.9473, 1.1148, -10.1441, 29.2761, -34.4553,
    -4.7176, 2.8386, -3.8010, 33.2357, -43.3369, -9.7781,
    21.9083, -19.8608, 4.4000, 56.1031, 29.8303, 4.6358,
    -39.1868, 53.4091, 29.2864, 25.4655, 47.6424, 25.7292,
    176.3200, -102.4900, -137.3760, 141.2600, 47.0224, 147.7150,
    23.0094, 163.2980, -134.0840, -49.6885, 13.4634, 51.6608,
    157.5510, -161.3510, 143.8600, -121.9240, -51.4047, -160.7840,
    132.4280, 81.2677, 17.5794, -120.1140, -67.0551,
};
constexpr double kP2KGU[] = {
    -20.3903, -8.0611, -3.2826, -67.6941, 45.6930, -20.2247,
    -20.7308, 39.7979, 23.0090, -80.6396, 17.3882, -11.2956,
    49.5839, 22.8948, 48.7441, -18.5021, 12.0394, -6.1734,
    39.9269, 41.8437, 16.1002, 46.2834, -27.8206, -67.6604,
    51.0005, -0.5175, -67.9650, -6.1230, -33.1634, -1.0703,
    -40.3086, 36.3314, 45.8033, 88.6758, 4.5815, -108.2150,
    -165.6070, 113.6270, -142.9800, 122.3020, -9.1593, -75.3266,
    -178.6330, -38.7442, -55.2161, -38.3169, 59.2034, 25.9876,
    -40.6129, -167.2930, -130.5570, 119.4140, -148.7180, 112.9520,
    4.5520, 29.5852, -2.8180, -178.3550, 176.0580, 59.9104,
    91.2364, 133.9350, -0.1914,
};
constexpr double kP1TZ4[] = {
    -15.7638, 65.4093, -18.2451, 3.3829, -16.9888, -4.9730,
    87.4546, 71.4324, -16.3281, 74.0167, 56.2012, 4.7176,
    -21.9275, 62.9128, -23.5336, 35.9449, -55.6337, 10.3504,
    -49.7316, -6.1732, 32.4112, 5.9317, -4.3330, -24.1410,
    11.9318, -0.3162, -82.2922, -2.1914, 24.2291, -11.9723,
    8.7969, -15.6866, 11.3306, 49.4570, -6.8914, 50.4939,
    172.7930, 68.3833, 156.4490, -118.1980, -154.5940, -174.4790,
    -108.7440, -4.5956, 28.2398, 161.1620, -170.7260, -59.2951,
    -1.7530, 8.3742, -171.1350, 126.5950, 19.5420, 3.9990,
    8.6668, -105.5200, -2.5719, -48.0064, -151.7840, 165.1080,
    -22.5612, 136.9780, 41.1048, -13.3115, 28.1205, -50.0945,
    -137.2560, 169.5130, 49.3965,
};
constexpr double kP1TZ5[] = {
    -23.1091, -43.4195, -14.3960, 0.5110, -64.3730, 35.2371,
    3.6583, 25.6251, -1.3167, 23.2115, -80.8154, 35.6936,
    -46.5693, 36.2667, -53.9418, 49.8668, 4.2588, 23.5710,
    17.1844, -3.7372, -8.1432, 71.7318, 16.6353, -5.1681,
    4.0692, 2.6351, -22.0101, 49.0679, -59.6484, -4.1104,
    -46.0026, 48.8265, -41.1272, 26.0293, 20.4298, 60.3889,
    176.5490, -167.3680, 124.7830, -35.0730, -19.8600, -3.4258,
    -87.1045, -173.8860, -179.2320, 144.4700, -167.6670, 174.9290,
    12.0025, 175.2420, -138.9210, -109.5620, -46.3340, 54.4235,
    49.1986, 150.4870, -139.5450, -96.4876, -3.2356, 53.7922,
    -37.8148, 55.7200, -168.2500, -96.8982, 175.9540, 74.7548,
    -161.3030, -130.5270, 128.7780,
};
constexpr double kP1AGT[] = {
    -24.3263, 5.3764, 10.4396, -2.1923, 20.4888, -30.3368,
    113.7510, 15.6216, -56.9395, -19.0429, -72.2923, -33.1192,
    -6.9467, 10.9927, 62.3836, -15.9923, 11.3987, -17.0893,
    -12.5705, 21.9368, -4.2042, -4.3799, 2.7916, -26.5601,
    57.6034, 2.5226, 8.6100, -18.8326, 1.3634, 24.5203,
    6.2251, -86.2994, -15.2180, -79.1866, -75.7196, -55.4643,
    54.0231, 115.4880, -131.4100, 136.0950, -117.8750, 33.2708,
    -24.0852, -161.2940, -38.9457, -148.5660, -25.2700, 51.9177,
    80.9154, -162.7170, -34.4541, -11.0239, -99.0138, 171.8190,
    148.9170, -158.1880, -122.4920, -37.4450, 48.1155, -164.7280,
    78.8424, -2.8201, -35.0597, 7.5444, 109.2200, 157.7730,
    -38.3773, 169.1840, 34.7763, 147.2250, 44.1010,
};
constexpr double kP1CRN[] = {
    50.0786, -4.0572, -61.2308, 44.6842, 76.8231, 57.6188,
    -32.4502, 2.4721, 12.0211, 74.3335, -0.8714, 12.0442,
    -0.6223, -2.6659, -5.0746, -1.1086, -5.0429, 27.4888,
    6.1272, 19.9300, -55.2943, -28.5681, -23.0060, -64.9208,
    0.5466, -5.4714, -6.4818, -8.4072, -4.9637, -32.0666,
    -44.4978, -12.3099, 24.4822, -61.0707, 23.1750, -15.7684,
    1.2729, -72.7992, 13.3133, 5.0746, 26.3956, -3.4537,
    34.6629, 2.6228, 54.3496, -43.1639, -127.9010, -12.0315,
    52.1853, -24.4792, -34.9035, 0.9760, -0.5159, -151.7190,
    -171.1650, 133.8860, 164.7700, -156.5570, 90.6416, 30.7998,
    147.5420, 85.8871, -25.4746, 55.2350, -48.5308, -68.2493,
    169.7940, 16.1425, -10.2563, -52.5471, -154.8070, 164.0250,
    -178.9780, 120.0000, 44.7010, -63.6278, 159.3880, -109.0940,
    146.7800, 157.5190, -15.0846, -59.3834, -49.8460, -63.0123,
    18.6074, 105.8140, -3.9525,
};
constexpr double kP2KAP[] = {
    24.3718, 27.4667, -44.0114, 42.1294, -59.6325, -44.5874,
    -5.5296, -31.0558, 3.8587, -74.0998, -37.9655, 68.1791,
    -11.7538, 72.6772, -5.4661, 63.9122, 2.6613, 44.6125,
    -21.2170, -1.4292, 39.5007, -17.5291, 21.1484, 27.0784,
    53.4574, 18.9653, -52.7529, 59.6967, 16.2715, 8.8282,
    46.2614, -12.4821, 86.2839, 71.9082, -1.7970, -2.0548,
    -51.5120, 37.8161, -7.8908, -34.5328, -15.1049, 14.2872,
    -90.8831, 23.9633, -29.2878, 13.1950, -42.4110, 7.1498,
    -14.1595, 20.3454, -18.4859, -18.9042, -2.1230, -4.0425,
    -20.7228, -70.4339, -36.7226, 17.3609, 19.0532, 43.6405,
    14.0840, -127.4210, -22.1486, -144.8530, -50.4490, -169.6760,
    11.7031, 131.7470, 179.9640, -146.4880, -8.9112, -177.3020,
    22.4927, 160.3420, 144.9730, 65.3899, 23.8940, -20.6934,
    -151.8260, -26.5497, 43.2933, 38.2212, -71.2860, 175.9890,
    -148.9180, 140.4420, 166.3260, -170.7830, -122.6240, 21.6178,
    -36.6286, 39.6738, -22.0121, -147.5460, -129.4730, -13.6816,
    36.4449, 9.4886, -13.4387, 40.1758, 166.4200, -76.3177,
    -45.6436, -146.6620, 141.4190, -114.9160, 168.8570, 76.1944,
    179.5190, 96.0169, 6.7884, -24.1243, 9.0689, -108.3530,
    -102.5490,
};
constexpr double kP1HVV[] = {
    28.2685, -40.6918, -7.7275, -32.3201, -20.7837, 10.2414,
    6.1012, -15.4520, -26.0580, -21.1452, -33.2152, 25.2166,
    22.1740, 73.0179, -12.3503, 13.0662, 2.7632, 1.3007,
    4.7266, -85.3002, -5.4729, 14.8792, 2.8751, 4.0576,
    -84.8795, 15.0615, 30.9497, 82.3684, -38.9026, 63.6890,
    7.7874, 41.7187, -4.1016, 0.5837, -7.2732, -9.6488,
    44.9434, 12.2383, -21.3734, 145.9480, -11.3667, -19.0659,
    -14.8583, 15.8618, 12.0296, -10.1809, 85.8912, 20.7189,
    -84.4999, -4.8766, 49.9831, 4.9592, 47.0089, 87.6569,
    36.3121, -95.9835, -22.6773, -13.3727, -31.4584, -13.4276,
    10.6063, 3.6482, -15.5338, 69.6840, -2.2884, 10.2172,
    -32.7510, -5.2629, 7.0523, 35.9366, -21.7282, -11.0987,
    -3.2714, 43.7507, -33.8599, -127.1520, -20.7062, 38.4249,
    50.7762, 152.1700, 156.1180, 179.5900, -132.1530, -171.4480,
    106.2230, -12.4394, 120.1950, 165.4130, -93.5222, -56.1465,
    -163.2590, 16.8057, -29.1228, -137.3300, -49.7135, 35.8770,
    -30.4969, 31.4916, -70.1748, 37.9770, 136.5180, 14.9668,
    159.6950, -138.9450, -148.1880, -101.2000, -7.5629, 41.1898,
    -42.7400, 67.5312, 161.6920, -49.0135, 147.9620, 59.5970,
    163.6870, 117.7390, 24.2642, -30.7786, 15.5388, -53.0329,
    -22.0126, -49.6826, -17.9750, 60.3983, 155.4430, 42.1223,
    142.8740, -33.7056, -11.3703, 23.0922, 16.8769, -30.8626,
    -138.3300, 175.4940, -154.8640, -16.5083, 12.0973, 42.3729,
    -53.0223, -120.5350, -153.5300, 152.0010, 17.4168, -3.2292,
    46.0565,
};
constexpr double kP1GK4[] = {
    -23.5368, -52.9765, -91.0886, -22.5084, 48.5852, 46.2424,
    6.7747, -18.6429, -29.4579, 12.3254, 32.9086, -9.8384,
    0.3103, -57.7047, -35.1338, 79.5519, -21.6135, 70.1648,
    -52.2448, -28.3012, -137.8700, 3.0760, -24.7032, 30.5878,
    -33.0627, 8.8434, -125.1280, -24.2820, 41.7009, 49.2211,
    11.0426, -18.3751, -31.3209, -9.8915, 15.8866, -53.1167,
    23.5343, -6.1429, -33.0249, 1.3760, -29.4937, 26.8502,
    -69.2160, -31.5893, 9.5558, 15.2941, -35.7348, -44.0274,
    12.8923, 65.1494, -17.7063, -10.1409, -3.2489, -13.8772,
    81.8159, -30.3965, -0.8736, 73.0233, -37.7217, -4.2948,
    -19.1917, -41.4329, 10.1900, 31.4222, 55.1983, -25.3248,
    -33.2248, 57.2687, -10.9687, -23.7223, 20.4717, 8.1177,
    6.1580, -14.6142, -33.8161, -17.7138, 23.7175, 22.1855,
    -110.1050, -42.2455, 15.3911, 67.9538, 108.5460, -8.2056,
    40.3298, -4.8811, -117.2820, -11.8158, -31.9969, 69.1024,
    140.0150, -165.8220, -50.0041, -87.3274, -161.6650, 162.0850,
    -67.1328, 171.2760, 151.3160, -72.9197, -14.4334, -16.9347,
    94.3613, 126.1540, 28.3020, -2.0875, 123.2920, -40.9864,
    -50.1576, -40.0075, -146.2250, -169.6290, 100.8440, 123.098,
    159.8380, 164.4800, -9.9628, 129.1940, 77.8586, -23.1678,
    -70.0338, 32.3327, -26.1254, -155.4590, -42.4838, -97.7798,
    160.0390, 132.2410, -149.6070, -73.8934, 0.8318, 119.7600,
    -132.7580, -73.1846, -21.7379, 20.8450, 123.8960, 86.9948,
    123.1030, 140.3210, 22.3489, 76.3421, -33.8403, -101.6840,
    150.6400, 155.2420, -49.0566, 58.1313, -24.0440, -15.2747,
    -41.5244, -56.1580, 45.9663, 108.4570, 144.3050, 172.4450,
    96.9614, -150.6490, 160.6200, 1.8834, -15.2365, -20.9220,
    -6.8423,
};
constexpr double kP1PCH[] = {
    44.5556, -54.2356, -99.8784, 63.3900, 79.3698, 80.0025,
    36.2528, -63.5092, 69.2080, -102.3630, -46.4701, 12.8899,
    -33.9664, -45.0167, 21.7445, -4.8924, 58.7080, -9.3451,
    50.1629, -71.1396, 39.1343, -93.8616, 23.7380, -9.5606,
    -48.9556, -13.8713, -4.7244, -5.5232, -24.5021, 56.6785,
    -24.8860, -72.7329, 14.6568, -32.6986, 27.8478, -6.2063,
    13.5359, -23.1337, -1.0471, -10.5722, -26.8637, 62.2722,
    -18.5086, 4.7446, 23.5224, -58.3009, 9.3932, 6.2841,
    -74.2319, -4.9259, 11.6023, -21.3455, 10.8119, -6.6138,
    -14.8199, -1.9473, -7.7355, -153.1700, 28.1558, 34.6185,
    32.6096, 10.3379, 13.9097, -18.7154, 73.1461, -7.6761,
    2.2450, -19.7779, -10.4513, 49.0782, -88.2309, -4.0134,
    19.5760, 45.2757, -0.0988, 9.6584, 37.5556, 4.6149,
    -28.0496, 31.4917, -53.0738, -30.8891, 75.8167, -44.1626,
    77.1048, 21.4111, -2.4662, -154.5360, -40.5056, -9.1083,
    14.6453, 8.4616, 173.0740, 4.2692, -119.6730, -46.9798,
    58.6207, -8.9283, 132.1090, 50.0801, -3.0832, -168.3060,
    149.2040, 174.0960, 48.1556, 38.6760, -149.7110, 107.5950,
    157.9690, -174.9360, -138.3730, -85.4430, -23.4847, 61.7108,
    -33.9020, -30.0635, 134.6030, 116.7520, 104.9670, -155.3420,
    -94.9446, -55.4257, -159.9640, -46.2382, -151.2140, -1.4016,
    20.0691, -52.3698, -151.1780, 41.8111, 19.4301, 130.6930,
    -27.8527, 73.8315, 23.8190, 44.5917, 134.1470, -136.3670,
    117.8080, -160.5790, -68.0745, -17.0275, -47.7369, -155.1620,
    -41.3912, -108.3610, 5.2759, -100.9010, 2.1443, 54.7888,
    -52.8865, 27.3697, 117.8370, 178.2460, -28.0998, 135.4250,
    100.7990, 175.9960, 138.6450, 36.4198, -13.5205, -16.0751,
    27.6616, -32.6852, -148.3610, -156.2740, -176.0750, -26.7138,
    -9.1947,
};
constexpr double kP2EWH[] = {
    116.1390, -49.4772, 10.3899, -58.2751, -23.3784, 24.6000,
    -36.7045, -149.0510, -132.7830, -21.0727, 23.5253, -104.1120,
    13.1179, 30.4175, 50.7226, -92.4012, 42.7474, -20.1564,
    52.6708, -88.4301, 56.8142, -27.6274, 18.5940, 76.6203,
    -3.5028, -52.0687, -21.2880, -49.3951, -31.6283, -32.7019,
    87.3416, 35.5355, 153.5040, 55.1270, -38.5958, -44.1908,
    -60.1665, 124.9320, -32.6850, -36.4796, -24.9186, -31.4726,
    16.5334, -52.5521, -14.6882, -8.9236, -31.3533, 1.2030,
    15.0014, -147.0140, 17.5299, 29.0412, 22.3586, 52.5274,
    130.4610, 46.9053, -17.6291, -2.6997, -40.4363, 103.5650,
    -64.7322, 72.7882, 26.9161, -1.2370, -70.9261, -49.9822,
    20.7601, -4.3949, 33.2222, 116.6310, 19.3606, -13.3266,
    -32.9903, -10.2704, 70.8096, -26.2030, -31.8590, -44.9023,
    -19.0768, 26.1096, 86.7503, 28.3688, 62.0058, 10.8096,
    -55.6498, -94.7941, 11.2196, -100.2350, 9.5840, -24.8805,
    -46.3249, 34.0227, -71.2436, -51.6366, -31.1617, 35.2951,
    63.5008, 178.0460, -8.7774, 53.6840, -50.0632, 50.8550,
    53.7114, -30.4684, -124.7150, -164.8180, -33.5956, -23.1001,
    24.0731, 41.1648, 16.1909, 35.4786, -66.5841, -138.5830,
    3.7838, 54.9703, 111.8690, 134.3130, -2.6298, 1.0777,
    20.5968, -62.7794, -151.8680, -69.6083, -22.6480, -12.1114,
    -120.8450, 34.6737, 43.1051, 47.5810, 18.0300, 61.4490,
    16.3383, -152.8790, -131.6510, 113.7650, 55.8909, 15.1288,
    -125.2830, -15.5483, -130.0730, -131.6170, -63.4486, -99.5910,
    32.9298, -107.2520, 164.8250, 80.9774, 41.5560, -48.8652,
    -36.5543, 69.0207, 115.5430, -136.8630, -1.0986, 64.7935,
    157.8040, 125.2570, 164.9310, -13.8925, 44.7431, 98.2381,
    6.9066, -72.9673, -0.7786, 55.2588, -55.9858, -122.9650,
    -31.8611, 52.8912, 155.6490, 168.2810, -76.7438, -24.3165,
    12.0668, -4.6317, -147.7810, -35.5362, -29.7130, 42.1289,
    11.3713, 36.2228, 29.0703, -158.5470, -133.9110, -141.0250,
    -36.0370, 14.3460, 38.1235, -6.7165, -171.0050,
};
constexpr double kF13[] = {
    7.6652, -83.4480, 13.0886, 0.5513, 29.1616, -47.9080,
    2.7533, -31.0327, -31.3119, -46.3918, 0.2762, 9.0488,
    -29.5745, -116.1991, 160.5075, 0.8902, 129.3809, 24.5074,
    113.3802, -161.6724, 98.7127,
};
constexpr double kF21[] = {
    -5.7082, -70.6345, 12.6013, -78.4561, 5.1401, 2.4915,
    57.5974, -25.4160, 27.2287, -35.8677, -5.3343, -13.9895,
    3.0216, 19.9055, 74.4006, -31.0708, 4.7647, -19.1022,
    -32.9492, -155.5060, 16.0013, 169.1010, -162.8930, 94.9124,
    -155.5030, 140.8910, -153.3320, -40.6752, -137.5630, -48.1957,
    35.2245, -66.7533, 37.5734, -137.9090, 144.5210, 52.7295,
    156.8710,
};
constexpr double kF34[] = {
    6.5328, -83.0367, 15.1104, 16.9355, 28.8433, 5.2647,
    52.5152, -13.0130, -25.2523, -8.0214, 7.0780, 11.7256,
    22.0270, -9.2043, -19.2205, -67.3482, 35.1195, -61.2379,
    31.1857, 11.0780, 4.1848, -27.4726, -1.3645, 17.3948,
    21.7434, -3.2610, 2.2779, -27.9407, -48.4669, 65.0824,
    -31.0953, 60.5105, 7.7212, -33.0859, -119.1020, 154.2810,
    -130.4210, 124.2230, -143.5030, 138.7690, 43.7392, 147.0940,
    61.7037, -26.8124, 57.2326, -54.5721, 42.5337, -159.4070,
    -126.2040, 164.1620, -82.2574, -146.6720, -55.1973, 26.5960,
    -75.9919, 8.7552, 97.1129, 29.5944, 148.8120, 38.8499,
    -155.1420, -157.7690, 138.1670,
};
constexpr double kF55[] = {
    -14.6178, -81.6545, 19.6900, -5.6211, -11.7680, 22.8494,
    -69.8362, 14.4445, -43.1447, -3.8896, 1.1940, 15.5990,
    7.0837, 50.9140, -3.1885, 26.1288, -6.1299, 11.2175,
    35.4476, -30.4055, -36.4612, -62.0732, -8.4399, 14.4819,
    -51.4732, 1.6699, 77.5096, -18.6569, 50.1675, 62.6634,
    22.5775, 16.9881, 90.7339, 8.8552, -50.9818, 20.9035,
    0.7712, -75.8221, -19.0744, -35.3043, 55.4823, -14.1388,
    70.1972, -16.3458, 38.5544, -25.9921, 17.2767, 49.0289,
    -67.9383, 35.1534, 21.0745, 23.8821, -9.0171, 159.3690,
    73.7248, 169.3710, -111.7520, 145.2790, -140.8670, -161.6070,
    -58.5454, 17.0275, -88.7363, -8.1599, 84.4661, -11.5182,
    112.5230, 42.2946, 141.6010, -141.0130, 112.6920, -146.3120,
    117.7950, -156.5060, -62.0114, -165.3900, -41.5667, 14.8274,
    -112.8120, 28.4051, -66.2272, 18.5640, 110.1050, 4.5585,
    13.1075, 172.1850, 51.2246, -163.9080, 88.4345, -179.2690,
    -104.2380, 150.2140, -53.4349, 177.6410, -166.9130, -19.3140,
    -137.7110, -21.1100, 52.3250, -50.1040, 130.8480, -28.1110,
    55.9000, 144.9420, 37.0490,
};
constexpr double kF89[] = {
    2.2272, 83.8283, -17.2516, 62.0451, -4.3957, -6.2564,
    -66.8426, 2.2260, -7.5549, 8.0116, 19.7190, 45.8951,
    59.1790, -44.2227, -38.1666, 61.8643, -12.3786, 66.5324,
    -11.5333, 21.1678, 55.8142, -6.0654, 33.8288, 27.3280,
    4.9158, 9.6687, 6.6218, -29.0447, 37.0295, -69.7487,
    55.7643, 5.2775, -85.3894, 19.8100, -56.6216, 35.6304,
    12.7408, -27.1700, 46.5212, 35.6991, 0.1863, -1.8802,
    -35.9248, -22.4080, 22.5394, 38.3030, 17.4329, -50.3094,
    16.5954, -13.2596, -75.6344, 3.0747, -5.4558, -32.5393,
    -2.4337, -38.7415, 9.2880, 3.5002, -94.3724, -7.7578,
    9.8094, 47.4793, -24.8944, 27.0513, 8.0774, -22.1472,
    -36.5275, -28.8212, 19.7025, 81.2552, -16.7670, 23.8761,
    -12.0107, -25.4997, 5.1184, 14.7353, 39.6318, 35.9480,
    -8.0517, -41.7183, 22.3815, 1.0366, -3.9487, -149.7020,
    -72.6194, 26.2519, 16.0132, 143.1950, 22.3287, 160.6860,
    -144.2450, 109.1530, -146.4920, 130.2590, -146.3270, -58.0928,
    -163.3600, -172.2370, 160.7630, 174.8980, 62.5863, -5.7606,
    57.2637, 167.9240, -11.5373, -130.6350, -16.0886, 14.2913,
    -55.8666, -153.8890, -61.0903, 22.9111, -82.1330, 29.6814,
    -37.7871, 157.3670, 117.8590, 2.1448, 33.3896, -170.4780,
    49.2151, -149.0470, 107.5210, -170.4170, -48.7215, -148.5490,
    -25.9835, -130.2780, -43.5506, 47.3040, -44.3866, 40.9219,
    131.1740, -2.8724, 160.3930, 47.5093, -19.5739, -160.8470,
    -59.9741, -175.7010, -130.4430, 147.7360, 52.9853, 160.5270,
    -18.4373, 6.4961, 110.2900, -5.9111, 146.7160, 140.5410,
    -167.5110, -54.9358, -134.6400, 135.564, -134.7360, 1.0748,
    -50.1584, 28.6888, 121.6580, 17.2979, 137.3170, 28.9442,
    112.3580, -153.7090, 116.875, -160.8470, -59.4520, -162.7970,
    -49.5730, -15.6227, 21.0721, 27.9867, 135.005,
};

struct RawEntry {
    const char* label;
    const char* sequence;
    std::optional<double> target;
    std::optional<double> best_known;
    const double* degrees;
    std::size_t count;
};

Conformation from_degrees(const double* values, std::size_t count)
{
    Conformation c;
    c.angles.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        c.angles.push_back(wrap_angle(degrees_to_radians(values[k])));
    }
    return c;
}

std::vector<BenchmarkEntry> build()
{
    const RawEntry raw[] = {
        {"1BXP", "ABBBBBBABBBAB", 5.6104, 5.6104, kP1BXP, std::size(kP1BXP)},
        {"1CB3", "BABBBAABBAAAB", 8.4589, 8.4589, kP1CB3, std::size(kP1CB3)},
        {"1BXL", "ABAABBAAAAABBABB", 17.3962, 17.3962, kP1BXL, std::size(kP1BXL)},
        {"1EDP", "ABABBAABBBAABBABA", 15.0092, 15.0092, kP1EDP, std::size(kP1EDP)},
        {"2ZNF", "ABABBAABBABAABBABA", 18.3402, 18.3402, kP2ZNF, std::size(kP2ZNF)},
        {"1EDN", "ABABBAABBBAABBABABAAB", 21.4703, 21.4703, kP1EDN, std::size(kP1EDN)},
        {"2H3S", "AABBAABBBBBABBBABAABBBBBB", 21.1519, 21.1519, kP2H3S, std::size(kP2H3S)},
        {"1ARE", "BBBAABAABBABABBBAABBBBBBBBBBB", std::nullopt, 25.2883, kP1ARE, std::size(kP1ARE)},
        {"2KGU", "ABAABBAABABBABAABAABABABABABAAABBB", std::nullopt, 53.6756, kP2KGU, std::size(kP2KGU)},
        {"1TZ4", "BABBABBAABBAAABBAABBAABABBBABAABBBBBB", std::nullopt, 43.1890, kP1TZ4, std::size(kP1TZ4)},
        {"1TZ5", "AAABAABAABBABABBAABBBBAABBBABAABBABBB", std::nullopt, 50.2703, kP1TZ5, std::size(kP1TZ5)},
        {"1AGT", "AAAABABABABABAABAABBAAABBABAABBBABABAB", std::nullopt, 66.2973, kP1AGT, std::size(kP1AGT)},
        {"1CRN", "BBAAABAAABBBBBAABAAABABAAAABBBAAAAAAAABAAABBAB", std::nullopt, 95.3159, kP1CRN, std::size(kP1CRN)},
        {"2KAP", "BBAABBABABABABBABABBBBABAABABAABBBBBBABBBAABAAABBABBABBAAAAB", std::nullopt, 89.5013, kP2KAP, std::size(kP2KAP)},
        {"1HVV", "BAABBABBBBBBAABABBBABBABBABABAAAAABBBABAABBABBBABBAABBABBAABBBBBAABBBBBABBB", std::nullopt, 101.6018, kP1HVV, std::size(kP1HVV)},
        {"1GK4", "ABABAABABBBBABBBABBABBBBAABAABBBBBAABABBBABBABBBAABBABBBBBAABABAAABABAABBBBAABABBBBA", std::nullopt, 112.3674, kP1GK4, std::size(kP1GK4)},
        {"1PCH", "ABBBAAABBBAAABABAABAAABBABBBBBABAAABBBBABABBAABAAAAAABBABBABABABABBABBAABAABBBAABBAAABA", std::nullopt, 166.7194, kP1PCH, std::size(kP1PCH)},
        {"2EWH", "AABABAAAAAAABBBAAAAAABAABAABBAABABAAABBBAAAABABAAABABBAAABAAABAAABAABBAABAAAAABAAABABBBABBAAABAABA", std::nullopt, 257.0741, kP2EWH, std::size(kP2EWH)},
        {"F13", "ABBABBABABBAB", 6.9961, 6.9961, kF13, std::size(kF13)},
        {"F21", "BABABBABABBABBABABBAB", 16.5544, 16.5544, kF21, std::size(kF21)},
        {"F34", "ABBABBABABBABBABABBABABBABBABABBAB", std::nullopt, 31.3732, kF34, std::size(kF34)},
        {"F55", "BABABBABABBABBABABBABABBABBABABBABBABABBABABBABBABABBAB", std::nullopt, 54.9269, kF55, std::size(kF55)},
        {"F89", "ABBABBABABBABBABABBABABBABBABABBABBABABBABABBABBABABBABABBABBABABBABBABABBABABBABBABABBAB", std::nullopt, 86.4318, kF89, std::size(kF89)},
    };
    std::vector<BenchmarkEntry> entries;
    for (const RawEntry& r : raw) {
        AbSequence seq = parse_ab_sequence(r.sequence, r.label);
        entries.push_back({r.label, std::move(seq), r.target, r.best_known,
                           from_degrees(r.degrees, r.count)});
    }
    return entries;
}

} // namespace

const std::vector<BenchmarkEntry>& builtin_benchmarks()
{
    static const std::vector<BenchmarkEntry> entries = build();
    return entries;
}

const BenchmarkEntry* find_builtin(std::string_view label)
{
    const auto same = [](std::string_view a, std::string_view b) {
        return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
            return std::toupper(static_cast<unsigned char>(x))
                == std::toupper(static_cast<unsigned char>(y));
        });
    };
    for (const BenchmarkEntry& e : builtin_benchmarks()) {
        if (same(e.label, label)) {
            return &e;
        }
    }
    return nullptr;
}

} // namespace abfold
