// Generated table of upper critical values at the 0.001 level.
// Entries are rounded up in the 4th decimal so floor lookups stay conservative.

#include "critical_values.hpp"

namespace sos::detail {

const std::array<double, 50> kDfGrid = {
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11,
    12, 13, 14, 15, 16, 17, 18, 19, 20, 21,
    22, 23, 24, 25, 26, 27, 28, 29, 30, 35,
    40, 45, 50, 60, 70, 80, 90, 100, 120,
    150, 200, 250, 300, 400, 500, 1000, 2000,
    5000, 10000,
};

// Two-sided Student t, i.e. the 0.9995 quantile.
const std::array<double, 50> kTCritical = {
    636.6193, 31.5991, 12.9240, 8.6104, 6.8689, 5.9589, 5.4079, 5.0414, 4.7810, 4.5869, 4.4370,
    4.3178, 4.2209, 4.1405, 4.0728, 4.0150, 3.9652, 3.9217, 3.8835, 3.8496, 3.8193, 3.7922,
    3.7677, 3.7454, 3.7252, 3.7067, 3.6896, 3.6740, 3.6595, 3.6460, 3.5912, 3.5510, 3.5203,
    3.4961, 3.4603, 3.4351, 3.4164, 3.4020, 3.3905, 3.3735, 3.3566, 3.3399, 3.3299, 3.3233,
    3.3151, 3.3101, 3.3003, 3.2954, 3.2925, 3.2915,
};
const double kTCriticalInf = 3.2906;

// Upper-tail F, rows df1 = 1..10, columns follow kDfGrid for df2.
const std::array<std::array<double, 50>, 10> kFCritical = {{
  {{
    405284.0680, 998.5003, 167.0293, 74.1373, 47.1808, 35.5075, 29.2452, 25.4148, 22.8572,
    21.0396, 19.6868, 18.6434, 17.8155, 17.1434, 16.5875, 16.1202, 15.7223, 15.3794, 15.0809,
    14.8188, 14.5869, 14.3803, 14.1951, 14.0281, 13.8767, 13.7390, 13.6131, 13.4976, 13.3913,
    13.2931, 12.8964, 12.6094, 12.3922, 12.2222, 11.9730, 11.7994, 11.6714, 11.5732, 11.4955,
    11.3802, 11.2666, 11.1546, 11.0881, 11.0441, 10.9894, 10.9568, 10.8919, 10.8597, 10.8404,
    10.8340,
  }},
  {{
    499999.5000, 999.0000, 148.5000, 61.2456, 37.1224, 27.0000, 21.6890, 18.4937, 16.3872,
    14.9054, 13.8116, 12.9737, 12.3128, 11.7789, 11.3392, 10.9710, 10.6585, 10.3900, 10.1569,
    9.9527, 9.7724, 9.6120, 9.4686, 9.3394, 9.2226, 9.1164, 9.0194, 8.9306, 8.8488, 8.7734,
    8.4697, 8.2508, 8.0856, 7.9565, 7.7678, 7.6366, 7.5401, 7.4662, 7.4077, 7.3212, 7.2359,
    7.1520, 7.1022, 7.0693, 7.0285, 7.0041, 6.9557, 6.9317, 6.9174, 6.9126,
  }},
  {{
    540379.2017, 999.1667, 141.1085, 56.1772, 33.2025, 23.7034, 18.7723, 15.8295, 13.9019,
    12.5528, 11.5612, 10.8043, 10.2090, 9.7294, 9.3353, 9.0060, 8.7269, 8.4875, 8.2800, 8.0984,
    7.9383, 7.7961, 7.6689, 7.5545, 7.4511, 7.3572, 7.2716, 7.1931, 7.1210, 7.0545, 6.7870,
    6.5946, 6.4496, 6.3364, 6.1713, 6.0566, 5.9724, 5.9078, 5.8569, 5.7814, 5.7072, 5.6342,
    5.5909, 5.5623, 5.5269, 5.5057, 5.4637, 5.4429, 5.4304, 5.4263,
  }},
  {{
    562499.5834, 999.2500, 137.1004, 53.4359, 31.0851, 21.9236, 17.1980, 14.3916, 12.5604,
    11.2828, 10.3462, 9.6328, 9.0728, 8.6224, 8.2527, 7.9443, 7.6831, 7.4593, 7.2655, 7.0961,
    6.9468, 6.8142, 6.6958, 6.5893, 6.4931, 6.4058, 6.3262, 6.2533, 6.1863, 6.1246, 5.8765,
    5.6982, 5.5640, 5.4593, 5.3068, 5.2009, 5.1232, 5.0637, 5.0167, 4.9472, 4.8789, 4.8117,
    4.7719, 4.7456, 4.7130, 4.6935, 4.6550, 4.6358, 4.6244, 4.6206,
  }},
  {{
    576404.5559, 999.3000, 134.5801, 51.7116, 29.7524, 20.8027, 16.2059, 13.4847, 11.7137,
    10.4808, 9.5784, 8.8922, 8.3541, 7.9219, 7.5674, 7.2719, 7.0219, 6.8078, 6.6225, 6.4606,
    6.3180, 6.1914, 6.0784, 5.9768, 5.8851, 5.8019, 5.7260, 5.6565, 5.5928, 5.5340, 5.2978,
    5.1283, 5.0008, 4.9014, 4.7566, 4.6562, 4.5825, 4.5261, 4.4816, 4.4157, 4.3510, 4.2874,
    4.2498, 4.2249, 4.1940, 4.1757, 4.1392, 4.1211, 4.1102, 4.1066,
  }},
  {{
    585937.1112, 999.3333, 132.8475, 50.5251, 28.8344, 20.0297, 15.5209, 12.8581, 11.1282,
    9.9257, 9.0467, 8.3789, 7.8558, 7.4358, 7.0917, 6.8050, 6.5625, 6.3550, 6.1755, 6.0187,
    5.8806, 5.7581, 5.6487, 5.5504, 5.4617, 5.3812, 5.3079, 5.2408, 5.1791, 5.1223, 4.8942,
    4.7306, 4.6076, 4.5117, 4.3721, 4.2753, 4.2043, 4.1500, 4.1072, 4.0438, 3.9815, 3.9203,
    3.8841, 3.8602, 3.8305, 3.8128, 3.7777, 3.7603, 3.7499, 3.7465,
  }},
  {{
    592873.2880, 999.3571, 131.5829, 49.6579, 28.1627, 19.4635, 15.0186, 12.3981, 10.6980,
    9.5175, 8.6554, 8.0009, 7.4886, 7.0775, 6.7409, 6.4604, 6.2234, 6.0206, 5.8452, 5.6920,
    5.5572, 5.4376, 5.3308, 5.2350, 5.1484, 5.0699, 4.9983, 4.9329, 4.8727, 4.8173, 4.5950,
    4.4356, 4.3157, 4.2224, 4.0865, 3.9923, 3.9232, 3.8704, 3.8287, 3.7670, 3.7065, 3.6470,
    3.6118, 3.5885, 3.5596, 3.5425, 3.5084, 3.4914, 3.4813, 3.4780,
  }},
  {{
    598144.1563, 999.3750, 130.6191, 48.9962, 27.6495, 19.0304, 14.6341, 12.0456, 10.3681,
    9.2042, 8.3548, 7.7104, 7.2062, 6.8018, 6.4707, 6.1950, 5.9621, 5.7628, 5.5905, 5.4400,
    5.3076, 5.1902, 5.0854, 4.9913, 4.9063, 4.8292, 4.7590, 4.6948, 4.6358, 4.5815, 4.3634,
    4.2071, 4.0896, 3.9981, 3.8649, 3.7726, 3.7049, 3.6532, 3.6123, 3.5519, 3.4926, 3.4343,
    3.3999, 3.3771, 3.3489, 3.3320, 3.2986, 3.2821, 3.2722, 3.2689,
  }},
  {{
    602283.9917, 999.3889, 129.8600, 48.4746, 27.2445, 18.6882, 14.3300, 11.7666, 10.1067,
    8.9558, 8.1164, 7.4798, 6.9819, 6.5827, 6.2559, 5.9839, 5.7541, 5.5576, 5.3876, 5.2393,
    5.1087, 4.9930, 4.8897, 4.7969, 4.7132, 4.6372, 4.5680, 4.5047, 4.4466, 4.3931, 4.1783,
    4.0243, 3.9086, 3.8185, 3.6873, 3.5965, 3.5299, 3.4789, 3.4387, 3.3793, 3.3209, 3.2636,
    3.2296, 3.2072, 3.1794, 3.1629, 3.1300, 3.1137, 3.1040, 3.1007,
  }},
  {{
    605620.9713, 999.4000, 129.2467, 48.0526, 26.9166, 18.4110, 14.0833, 11.5401, 9.8944,
    8.7539, 7.9224, 7.2921, 6.7992, 6.4041, 6.0808, 5.8117, 5.5844, 5.3900, 5.2220, 5.0753,
    4.9462, 4.8318, 4.7296, 4.6379, 4.5552, 4.4801, 4.4117, 4.3492, 4.2918, 4.2388, 4.0266,
    3.8744, 3.7601, 3.6711, 3.5415, 3.4518, 3.3860, 3.3356, 3.2959, 3.2372, 3.1795, 3.1229,
    3.0894, 3.0673, 3.0398, 3.0234, 2.9910, 2.9749, 2.9653, 2.9621,
  }},
}};
const std::array<double, 10> kFCriticalInf = {
    10.8276, 6.9078, 5.4221, 4.6168, 4.1031, 3.7430, 3.4746, 3.2656, 3.0975, 2.9589,
};

}  // namespace sos::detail
