"""Simulated asymptotic quantiles of the Johansen trace and max-eigenvalue
statistics.

Generated by scripts/simulate_johansen_tables.py (reps=100000, steps=1000, seed=19990101).  Do not edit.

QUANTILES[kind][case][n - 1] holds the statistic values at the CDF levels
in LEVELS, for n = m - r = 1..12 stochastic trends under the null."""

LEVELS = (0.001, 0.005, 0.01, 0.025, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.925, 0.95, 0.96, 0.97, 0.975, 0.98, 0.99, 0.995, 0.9975, 0.999)

QUANTILES = {
    "trace": {
        1: (
            (0.00153, 0.00159, 0.00177, 0.00302, 0.00756, 0.02486, 0.05443, 0.09642, 0.15097, 0.21583, 0.29186, 0.38048, 0.48464, 0.59939, 0.72800, 0.88467, 1.06737, 1.28613, 1.54761, 1.87636, 2.31510, 2.96718, 3.43790, 4.13800, 4.52398, 5.01307, 5.35122, 5.72081, 6.99990, 8.30945, 9.47223, 11.35308),
            (0.73428, 1.04517, 1.25093, 1.61372, 2.00506, 2.54845, 2.98366, 3.36589, 3.72443, 4.07992, 4.42270, 4.78833, 5.14490, 5.51432, 5.90677, 6.32460, 6.78014, 7.27564, 7.85105, 8.53100, 9.37288, 10.51406, 11.30758, 12.35369, 12.94154, 13.68778, 14.12601, 14.72170, 16.51734, 18.08281, 19.71342, 21.87066),
            (4.52162, 5.57364, 6.15659, 7.06241, 7.98896, 9.15554, 10.02701, 10.75165, 11.41188, 12.02859, 12.64309, 13.23033, 13.83431, 14.44497, 15.06199, 15.71495, 16.40611, 17.16406, 18.01689, 18.99880, 20.19084, 21.80869, 22.88549, 24.32848, 25.11223, 26.12871, 26.72823, 27.41643, 29.60842, 31.81437, 33.86444, 36.26311),
            (12.51944, 14.26580, 15.16647, 16.67837, 18.09617, 19.95101, 21.21187, 22.27806, 23.24683, 24.12752, 24.99946, 25.82101, 26.66694, 27.50775, 28.35244, 29.22088, 30.14774, 31.15537, 32.27368, 33.52738, 35.08613, 37.08876, 38.40511, 40.21071, 41.15185, 42.32343, 43.06646, 43.97573, 46.72594, 49.35542, 51.57878, 54.98859),
            (23.90379, 26.66777, 28.06947, 30.24866, 32.21036, 34.69175, 36.43479, 37.82734, 39.09124, 40.23639, 41.32839, 42.39166, 43.42903, 44.48566, 45.55222, 46.64388, 47.79523, 49.06100, 50.39622, 51.96559, 53.84547, 56.29270, 57.95597, 60.13513, 61.23185, 62.67522, 63.50264, 64.54488, 67.63426, 70.37477, 73.04063, 76.60429),
            (39.93933, 43.20294, 44.95837, 47.73776, 50.29132, 53.39052, 55.51857, 57.25803, 58.78080, 60.23897, 61.59029, 62.92470, 64.20457, 65.48684, 66.76764, 68.11694, 69.48990, 70.98197, 72.62201, 74.48497, 76.71391, 79.58565, 81.43577, 83.99173, 85.28627, 86.94467, 87.98832, 89.15146, 92.87723, 96.10589, 99.30786, 103.01507),
            (59.14685, 63.59485, 65.91572, 69.33195, 72.35308, 76.04108, 78.65748, 80.73923, 82.58809, 84.27581, 85.88936, 87.42983, 88.89514, 90.35245, 91.88032, 93.43510, 95.08158, 96.81357, 98.70442, 100.84472, 103.41108, 106.70545, 108.86324, 111.73759, 113.23709, 115.14241, 116.26178, 117.73295, 121.80867, 125.27009, 128.96010, 133.62056),
            (82.85039, 88.17751, 90.92092, 94.94713, 98.51666, 102.87713, 105.90007, 108.31488, 110.45012, 112.41018, 114.19505, 115.94096, 117.61141, 119.36819, 121.15151, 122.95976, 124.80894, 126.78977, 128.98121, 131.48017, 134.38317, 138.14056, 140.61648, 143.83538, 145.50467, 147.65317, 148.87940, 150.50382, 154.98537, 159.32211, 163.35679, 167.91627),
            (110.34639, 116.20101, 119.61101, 124.51071, 128.67905, 133.75831, 137.07115, 139.84610, 142.23350, 144.44203, 146.49323, 148.49244, 150.45491, 152.37221, 154.30670, 156.28956, 158.38472, 160.65305, 163.15652, 165.88027, 169.12248, 173.33561, 176.06793, 179.75304, 181.63440, 183.90842, 185.19501, 186.96529, 191.90583, 196.53902, 200.85328, 207.23819),
            (142.16644, 148.87027, 152.39512, 157.87708, 162.80561, 168.40382, 172.24401, 175.36167, 178.07392, 180.53001, 182.80493, 185.00910, 187.19040, 189.36275, 191.53128, 193.79334, 196.05168, 198.48251, 201.07774, 204.15035, 207.74543, 212.32409, 215.39983, 219.43294, 221.37204, 223.88529, 225.48358, 227.42022, 232.56877, 238.17338, 242.36297, 247.80620),
            (177.75139, 185.88147, 189.74852, 195.58110, 200.88654, 207.15099, 211.35445, 214.81591, 217.81532, 220.46445, 223.00317, 225.46367, 227.86259, 230.24588, 232.62602, 235.06707, 237.62649, 240.33516, 243.27669, 246.62573, 250.61929, 255.65333, 258.85439, 263.18027, 265.51371, 268.25562, 269.99771, 271.99413, 278.06674, 283.35484, 288.16824, 295.49035),
            (218.23048, 226.71567, 231.10321, 237.52871, 243.07737, 249.81790, 254.42177, 258.19080, 261.52411, 264.54184, 267.35952, 270.03912, 272.62907, 275.26375, 277.87135, 280.57357, 283.34125, 286.32631, 289.50274, 293.02258, 297.31534, 302.72880, 306.15893, 310.91075, 313.22620, 316.26792, 318.19871, 320.29503, 326.74673, 332.59107, 338.33244, 345.64539),
        ),
        2: (
            (0.33558, 0.49413, 0.59488, 0.79592, 1.01961, 1.34875, 1.63128, 1.89144, 2.14968, 2.39696, 2.65325, 2.91389, 3.18760, 3.46602, 3.77201, 4.09917, 4.46223, 4.86349, 5.33968, 5.89968, 6.60287, 7.58353, 8.25295, 9.21054, 9.70773, 10.39831, 10.82904, 11.33414, 12.84147, 14.32240, 15.78913, 17.86500),
            (3.35091, 4.12301, 4.58259, 5.28016, 6.01699, 6.95417, 7.67287, 8.28554, 8.84425, 9.37191, 9.89467, 10.39732, 10.92505, 11.46175, 12.00532, 12.57481, 13.19578, 13.87796, 14.64401, 15.50181, 16.56616, 18.01239, 18.95824, 20.25449, 20.94219, 21.87902, 22.43029, 23.12152, 25.13015, 27.05227, 28.91890, 31.58309),
            (9.98168, 11.58136, 12.46631, 13.86405, 15.13279, 16.72178, 17.84988, 18.80402, 19.67184, 20.47345, 21.21718, 21.96918, 22.67397, 23.44326, 24.20580, 25.01521, 25.88392, 26.81092, 27.83437, 29.01338, 30.44369, 32.25612, 33.47298, 35.13691, 36.02508, 37.17512, 37.82792, 38.65938, 41.10102, 43.51028, 45.89634, 48.63178),
            (20.72371, 23.12327, 24.38705, 26.32040, 28.12092, 30.34165, 31.95413, 33.25921, 34.42189, 35.51001, 36.51314, 37.47858, 38.43700, 39.39811, 40.41732, 41.46782, 42.54231, 43.71566, 45.01920, 46.50060, 48.27817, 50.59640, 52.09377, 54.07248, 55.14898, 56.58015, 57.35520, 58.31143, 61.19790, 64.00471, 66.83791, 70.61271),
            (35.25701, 38.53440, 40.29695, 42.89433, 45.28486, 48.13198, 50.14808, 51.79012, 53.23007, 54.56919, 55.82681, 57.06423, 58.25474, 59.45168, 60.62881, 61.86434, 63.20667, 64.62903, 66.18638, 67.93818, 70.06258, 72.68814, 74.48974, 76.85990, 78.16320, 79.81992, 80.80771, 81.89049, 85.24520, 88.64704, 91.93242, 95.84520),
            (54.17021, 58.08166, 60.38101, 63.61261, 66.52775, 69.96625, 72.36313, 74.31397, 76.06658, 77.66913, 79.19853, 80.63035, 82.01973, 83.39233, 84.86350, 86.33359, 87.90734, 89.56616, 91.39339, 93.45957, 95.92301, 99.02155, 101.17407, 103.93195, 105.30407, 107.04553, 108.16117, 109.59898, 113.50455, 117.12879, 120.62586, 125.28236),
            (76.91016, 81.81115, 84.26410, 88.09456, 91.58202, 95.66047, 98.46289, 100.79720, 102.83927, 104.69590, 106.42916, 108.07636, 109.73059, 111.38270, 113.02512, 114.73491, 116.52759, 118.42374, 120.49182, 122.82614, 125.65801, 129.21974, 131.57316, 134.68258, 136.27502, 138.24928, 139.54242, 141.09939, 145.28455, 149.22000, 152.83712, 156.94820),
            (103.01803, 108.89408, 111.88151, 116.47670, 120.52233, 125.34555, 128.65198, 131.34675, 133.70326, 135.82976, 137.81242, 139.72390, 141.62869, 143.46680, 145.35412, 147.27235, 149.28457, 151.39235, 153.73162, 156.37264, 159.46522, 163.54398, 166.16019, 169.63730, 171.47838, 173.71343, 175.09479, 176.75593, 181.43751, 186.00615, 190.33926, 195.82897),
            (134.45714, 140.72808, 144.21385, 149.21626, 153.73568, 159.06406, 162.81585, 165.76237, 168.33406, 170.72430, 172.95366, 175.04603, 177.14288, 179.22283, 181.28265, 183.43835, 185.65650, 188.14506, 190.74227, 193.70046, 197.09587, 201.49671, 204.43962, 208.23114, 210.31290, 212.76705, 214.23234, 215.99279, 221.15454, 226.18201, 230.80057, 235.94278),
            (167.66045, 175.95993, 179.90579, 185.65888, 190.87247, 197.00232, 201.07522, 204.49078, 207.35905, 209.96837, 212.41817, 214.72306, 217.06140, 219.39966, 221.71102, 224.06336, 226.58529, 229.23641, 232.11652, 235.33418, 239.17144, 243.92782, 247.09251, 251.34378, 253.44746, 256.12895, 257.83323, 259.71496, 265.74178, 270.80326, 276.43047, 282.82482),
            (207.13863, 215.53249, 219.74394, 226.12862, 231.82195, 238.42143, 243.15254, 246.79797, 249.98761, 252.91489, 255.65002, 258.26267, 260.82530, 263.33236, 265.85845, 268.49203, 271.15518, 274.01790, 277.11688, 280.59604, 284.78780, 290.03874, 293.61516, 298.17538, 300.63751, 303.54205, 305.37052, 307.45782, 313.95366, 319.61129, 325.07643, 331.52068),
            (249.64791, 259.49652, 263.85250, 271.09620, 277.17701, 284.30798, 289.18852, 293.22876, 296.79327, 299.98148, 303.02828, 305.84760, 308.52305, 311.24917, 313.94513, 316.77881, 319.75104, 322.82371, 326.16365, 330.03577, 334.63850, 340.26611, 344.05269, 348.90654, 351.53498, 354.78325, 356.57697, 358.86263, 365.51045, 371.53462, 377.20824, 384.97992),
        ),
        3: (
            (0.00000, 0.00004, 0.00016, 0.00098, 0.00393, 0.01579, 0.03577, 0.06418, 0.10153, 0.14847, 0.20590, 0.27500, 0.35732, 0.45494, 0.57065, 0.70833, 0.87346, 1.07419, 1.32330, 1.64237, 2.07225, 2.70554, 3.17005, 3.84146, 4.21788, 4.70929, 5.02389, 5.41189, 6.63490, 7.87944, 9.14059, 10.82757),
            (1.52576, 1.99972, 2.29444, 2.80489, 3.32074, 4.03857, 4.58837, 5.08416, 5.52974, 5.95910, 6.37810, 6.80437, 7.22895, 7.67464, 8.14033, 8.62750, 9.15973, 9.73880, 10.40369, 11.18075, 12.14157, 13.41728, 14.28690, 15.47974, 16.09671, 16.88701, 17.38037, 17.96412, 19.83260, 21.60171, 23.44962, 25.66741),
            (7.00064, 8.42261, 9.16582, 10.27637, 11.39241, 12.79998, 13.80948, 14.66637, 15.44638, 16.16632, 16.85093, 17.52981, 18.19394, 18.87177, 19.56824, 20.29545, 21.08429, 21.93843, 22.89740, 23.99546, 25.34398, 27.06660, 28.22021, 29.75310, 30.58617, 31.65697, 32.29054, 33.11064, 35.56914, 37.77207, 39.76357, 42.43253),
            (16.88700, 18.99432, 20.16453, 21.91991, 23.57943, 25.60394, 27.07310, 28.28390, 29.33986, 30.31894, 31.25610, 32.14564, 33.07170, 33.97137, 34.91707, 35.86397, 36.90944, 38.03132, 39.24730, 40.63781, 42.26120, 44.45020, 45.85430, 47.81886, 48.78827, 50.05053, 50.85008, 51.79497, 54.71106, 57.40938, 60.09215, 63.86894),
            (30.55767, 33.72116, 35.37286, 37.77396, 39.94316, 42.62791, 44.46209, 45.98802, 47.38083, 48.63446, 49.80854, 50.94604, 52.06132, 53.18425, 54.33642, 55.51865, 56.73385, 58.07360, 59.51206, 61.23321, 63.21080, 65.84297, 67.58206, 69.82296, 71.08651, 72.57458, 73.51541, 74.67087, 77.98350, 81.09003, 84.06691, 87.38185),
            (48.52795, 52.16909, 54.15883, 57.26885, 60.07510, 63.28925, 65.62596, 67.54319, 69.18990, 70.70162, 72.11651, 73.46642, 74.82232, 76.16357, 77.54558, 78.95951, 80.42166, 81.99575, 83.73368, 85.67042, 88.05601, 91.11539, 93.12698, 95.73986, 97.12836, 99.00351, 100.01026, 101.29952, 105.13421, 108.52680, 111.88200, 115.71936),
            (70.30675, 74.87094, 77.35945, 80.99540, 84.28200, 88.17260, 90.92801, 93.14614, 95.10993, 96.88641, 98.54689, 100.15276, 101.73546, 103.30820, 104.86960, 106.46122, 108.16539, 109.97908, 111.94733, 114.20193, 116.88035, 120.37843, 122.64238, 125.63750, 127.18271, 129.12582, 130.32924, 131.77207, 136.04436, 140.03744, 144.00198, 148.73390),
            (95.72333, 101.45632, 104.04034, 108.37208, 112.26949, 116.95248, 120.05793, 122.58991, 124.83642, 126.85582, 128.75670, 130.60237, 132.42437, 134.18315, 135.98855, 137.86065, 139.80867, 141.88483, 144.14048, 146.61984, 149.60850, 153.52685, 156.04460, 159.24300, 160.97837, 163.06569, 164.46856, 166.12856, 170.85124, 175.17590, 179.51288, 184.28080),
            (126.03650, 132.08517, 135.30981, 140.31701, 144.70043, 149.77229, 153.41902, 156.27333, 158.75500, 161.06534, 163.21451, 165.27468, 167.29245, 169.26085, 171.29273, 173.37831, 175.53637, 177.86801, 180.38945, 183.19342, 186.56111, 190.79732, 193.62813, 197.41146, 199.31382, 201.72880, 203.14744, 204.90306, 210.25279, 214.94780, 219.19336, 224.99685),
            (159.97805, 167.00107, 170.51125, 175.88856, 180.67954, 186.43303, 190.45918, 193.70525, 196.53659, 199.10754, 201.46125, 203.73113, 205.97651, 208.13935, 210.38698, 212.68940, 215.12140, 217.63021, 220.49601, 223.64773, 227.30362, 232.02587, 235.12435, 239.09882, 241.25733, 244.02133, 245.50926, 247.43228, 253.43631, 258.84966, 263.42771, 270.48719),
            (195.78368, 204.89241, 209.21847, 215.33490, 220.89551, 227.35058, 231.62502, 235.18146, 238.34851, 241.15958, 243.80112, 246.33640, 248.75974, 251.18273, 253.63695, 256.18644, 258.81551, 261.58171, 264.61181, 268.06664, 272.23086, 277.35634, 280.63510, 285.10124, 287.38041, 290.31766, 291.98008, 293.91750, 300.07931, 305.68853, 311.39354, 317.96466),
            (237.93571, 247.28969, 252.02963, 259.10826, 265.14623, 272.05352, 276.84978, 280.83127, 284.22489, 287.31725, 290.08447, 292.79294, 295.45592, 298.08203, 300.75899, 303.48306, 306.32722, 309.40230, 312.66331, 316.40746, 320.80792, 326.34909, 330.04617, 334.87945, 337.32212, 340.36023, 342.06463, 344.30512, 350.63223, 356.94967, 362.73059, 370.24237),
        ),
        4: (
            (1.02406, 1.34133, 1.53398, 1.88891, 2.26579, 2.79641, 3.21809, 3.59716, 3.95277, 4.29953, 4.63685, 4.97926, 5.32461, 5.68973, 6.06798, 6.49440, 6.94119, 7.45399, 8.01748, 8.69895, 9.52837, 10.68079, 11.44558, 12.49022, 13.06609, 13.82635, 14.27924, 14.80947, 16.52203, 18.13109, 19.85541, 21.59966),
            (5.77757, 6.79132, 7.36519, 8.35827, 9.29598, 10.51632, 11.39117, 12.15705, 12.82475, 13.45640, 14.06837, 14.65684, 15.26043, 15.88985, 16.52245, 17.18272, 17.89422, 18.65926, 19.52295, 20.53480, 21.75358, 23.37254, 24.48214, 25.90279, 26.67327, 27.66123, 28.26237, 29.00028, 31.19564, 33.32101, 35.30055, 37.74249),
            (14.54738, 16.52349, 17.56680, 19.13533, 20.63648, 22.40204, 23.69613, 24.80313, 25.76970, 26.67619, 27.53958, 28.39419, 29.22304, 30.05353, 30.90701, 31.78099, 32.72846, 33.75904, 34.86662, 36.12814, 37.65468, 39.64563, 41.02870, 42.85361, 43.75588, 44.96623, 45.73187, 46.58818, 49.31737, 51.89659, 54.11019, 56.87994),
            (27.34982, 30.13981, 31.67492, 33.80400, 35.77907, 38.24908, 39.93993, 41.38266, 42.63728, 43.81992, 44.91981, 45.97994, 47.05337, 48.09407, 49.16503, 50.29164, 51.46667, 52.73840, 54.13360, 55.75702, 57.65950, 60.09038, 61.74345, 63.95597, 65.09562, 66.46299, 67.34202, 68.36072, 71.41264, 74.43642, 77.22076, 80.67264),
            (44.17821, 47.83861, 49.67644, 52.41337, 54.96867, 58.03117, 60.20442, 61.99492, 63.56006, 64.97112, 66.29134, 67.58305, 68.86837, 70.16493, 71.47428, 72.85613, 74.26273, 75.74690, 77.39335, 79.24248, 81.43724, 84.39994, 86.23427, 88.68716, 89.95296, 91.67924, 92.71504, 93.92817, 97.51476, 100.80939, 103.93504, 107.96297),
            (65.25705, 69.34136, 71.68514, 75.15783, 78.26889, 81.96262, 84.51855, 86.65193, 88.46719, 90.13869, 91.74764, 93.27780, 94.76551, 96.24608, 97.79306, 99.35099, 100.96523, 102.72898, 104.59018, 106.69337, 109.28711, 112.58813, 114.73611, 117.57487, 119.08006, 121.06957, 122.29677, 123.66508, 127.68989, 131.52511, 135.26094, 139.58597),
            (89.44365, 94.84623, 97.57848, 101.70984, 105.24094, 109.62966, 112.67804, 115.09359, 117.18732, 119.12014, 120.94697, 122.72533, 124.46647, 126.19557, 127.89279, 129.66639, 131.52101, 133.47905, 135.60190, 138.04769, 140.95393, 144.77210, 147.27360, 150.37077, 152.03776, 154.05038, 155.42404, 156.94707, 161.37902, 165.43257, 169.36467, 174.51616),
            (118.03728, 124.70383, 127.76814, 132.32911, 136.53382, 141.48168, 144.95859, 147.65335, 150.03125, 152.25984, 154.27586, 156.29400, 158.27610, 160.20242, 162.17623, 164.17461, 166.25908, 168.47363, 170.96614, 173.72184, 176.94594, 181.16405, 183.96530, 187.63589, 189.46662, 191.81367, 193.32190, 194.82956, 199.78289, 204.47264, 208.95383, 214.30944),
            (150.55551, 158.05296, 161.55176, 166.96001, 171.66229, 177.28047, 181.13265, 184.16713, 186.87356, 189.37779, 191.69283, 193.88072, 196.06297, 198.28426, 200.37771, 202.54879, 204.89974, 207.32305, 210.06636, 213.14102, 216.69814, 221.23014, 224.08853, 228.00624, 230.09217, 232.68409, 234.30433, 236.14141, 241.46281, 246.55113, 251.36053, 257.10910),
            (186.80867, 195.18220, 199.32336, 205.41162, 210.61606, 216.88756, 221.23993, 224.71320, 227.59612, 230.29832, 232.82873, 235.27638, 237.65445, 239.99421, 242.39525, 244.90026, 247.45114, 250.19397, 253.14848, 256.49582, 260.50983, 265.43029, 268.71710, 273.08953, 275.32566, 278.02280, 279.82572, 281.82988, 287.50427, 292.86353, 297.63198, 303.25222),
            (228.34043, 237.20083, 241.59975, 248.18790, 254.17294, 260.96623, 265.66330, 269.45392, 272.72520, 275.69505, 278.48854, 281.11513, 283.69523, 286.18741, 288.73380, 291.36226, 294.16686, 297.09554, 300.30124, 303.88833, 308.12082, 313.74774, 317.31368, 322.07258, 324.58026, 327.53382, 329.48583, 331.76813, 338.14710, 344.39651, 349.92143, 357.70761),
            (273.02302, 282.75493, 287.64685, 294.78106, 301.03041, 308.47148, 313.60488, 317.71473, 321.32145, 324.61862, 327.63644, 330.57178, 333.40921, 336.26911, 339.12207, 342.01767, 344.95770, 348.15528, 351.62253, 355.54338, 360.10858, 365.91053, 369.70475, 374.93229, 377.47652, 380.64314, 382.51124, 384.84639, 391.88831, 398.36008, 403.93439, 411.81957),
        ),
        5: (
            (0.00000, 0.00004, 0.00016, 0.00098, 0.00393, 0.01579, 0.03577, 0.06418, 0.10153, 0.14847, 0.20590, 0.27500, 0.35732, 0.45494, 0.57065, 0.70833, 0.87346, 1.07419, 1.32330, 1.64237, 2.07225, 2.70554, 3.17005, 3.84146, 4.21788, 4.70929, 5.02389, 5.41189, 6.63490, 7.87944, 9.14059, 10.82757),
            (2.30061, 2.99474, 3.41750, 4.08260, 4.73786, 5.60356, 6.25411, 6.82482, 7.33805, 7.82937, 8.30433, 8.79587, 9.27683, 9.77844, 10.29543, 10.85316, 11.44968, 12.09894, 12.83362, 13.69260, 14.72778, 16.13913, 17.05867, 18.35921, 19.02969, 19.92009, 20.47039, 21.19459, 23.15064, 25.12946, 27.02274, 29.52589),
            (9.66988, 11.25175, 12.11082, 13.46586, 14.71890, 16.34697, 17.47724, 18.43270, 19.30774, 20.09586, 20.86042, 21.61382, 22.35839, 23.13251, 23.92042, 24.73933, 25.59979, 26.52546, 27.56604, 28.74552, 30.21529, 32.09857, 33.37547, 35.05099, 35.98099, 37.09515, 37.76593, 38.62162, 41.20891, 43.60369, 45.97829, 49.08590),
            (21.51579, 23.75773, 25.09889, 27.06466, 28.92915, 31.20097, 32.80527, 34.16637, 35.36545, 36.45728, 37.50587, 38.48320, 39.45194, 40.43816, 41.44807, 42.50556, 43.60201, 44.78573, 46.08252, 47.58166, 49.37544, 51.71545, 53.22556, 55.26514, 56.30653, 57.67550, 58.53128, 59.46967, 62.57350, 65.49988, 67.92780, 71.43322),
            (37.04858, 40.54339, 42.16424, 44.75384, 47.12563, 50.03892, 52.10362, 53.75626, 55.23323, 56.55961, 57.83472, 59.06424, 60.26338, 61.45908, 62.69193, 63.98874, 65.31672, 66.74368, 68.34455, 70.15363, 72.26158, 75.04259, 76.90112, 79.40125, 80.64192, 82.20613, 83.17848, 84.38071, 87.70128, 91.19541, 94.39459, 98.72562),
            (56.63432, 61.02329, 63.16524, 66.47899, 69.36642, 72.91027, 75.39111, 77.42593, 79.18322, 80.80990, 82.30798, 83.75418, 85.20461, 86.64174, 88.10175, 89.59682, 91.15025, 92.82278, 94.63153, 96.67649, 99.16367, 102.38846, 104.56793, 107.38106, 108.84061, 110.60852, 111.66398, 112.98999, 116.83967, 120.72918, 124.16464, 128.70567),
            (81.00966, 85.99827, 88.44656, 92.24717, 95.76085, 99.83730, 102.73267, 105.08864, 107.09301, 108.97760, 110.73113, 112.42910, 114.09251, 115.71571, 117.39973, 119.12432, 120.87342, 122.81568, 124.90336, 127.25083, 130.08246, 133.72490, 136.12812, 139.16482, 140.80599, 142.82329, 144.13093, 145.61585, 150.16576, 153.99281, 157.90245, 163.01672),
            (108.36598, 114.39964, 117.33899, 121.92948, 125.88546, 130.64486, 133.95000, 136.67000, 138.96626, 141.03280, 143.00279, 144.90499, 146.80489, 148.68867, 150.58893, 152.55032, 154.57497, 156.75258, 159.09546, 161.72229, 164.91031, 168.90089, 171.47228, 174.86304, 176.78773, 179.20843, 180.63854, 182.17621, 186.83481, 191.49958, 195.31536, 200.26710),
            (140.74479, 146.88818, 150.35830, 155.66643, 160.20965, 165.59108, 169.35978, 172.38938, 175.00271, 177.37019, 179.56273, 181.74908, 183.83065, 185.91813, 188.01972, 190.16434, 192.37979, 194.76612, 197.38931, 200.28281, 203.73716, 208.17634, 211.13023, 214.99118, 217.08183, 219.56203, 221.01758, 222.75255, 227.93997, 232.75053, 237.41126, 243.50883),
            (176.01453, 183.51591, 187.24612, 193.19639, 198.44362, 204.50124, 208.63402, 211.99879, 214.86350, 217.53987, 220.04220, 222.35629, 224.68507, 227.04740, 229.33032, 231.64789, 234.16074, 236.80248, 239.69505, 242.80969, 246.57152, 251.52921, 254.70930, 258.97705, 261.09235, 263.81450, 265.54890, 267.58170, 273.08689, 278.72271, 283.60999, 289.71149),
            (215.18181, 224.22486, 228.52074, 234.69738, 240.48382, 247.32288, 251.84680, 255.43096, 258.61529, 261.49691, 264.23059, 266.81849, 269.36908, 271.88638, 274.44238, 277.06051, 279.76994, 282.61439, 285.74361, 289.22678, 293.28840, 298.61156, 302.03429, 306.55905, 308.83681, 311.67387, 313.44582, 315.57103, 321.87142, 327.66890, 333.35885, 339.39363),
            (259.48550, 268.65555, 273.61750, 280.59271, 286.57765, 293.82499, 298.84389, 302.96531, 306.43314, 309.65070, 312.59378, 315.41896, 318.18176, 320.94052, 323.73349, 326.62126, 329.52933, 332.51439, 335.91679, 339.76422, 344.21638, 349.93584, 353.69998, 358.43301, 361.04398, 364.09216, 365.93627, 368.43996, 375.25875, 382.04513, 388.51596, 396.08625),
        ),
    },
    "maxeig": {
        1: (
            (0.00153, 0.00159, 0.00177, 0.00302, 0.00756, 0.02486, 0.05443, 0.09642, 0.15097, 0.21583, 0.29186, 0.38048, 0.48464, 0.59939, 0.72800, 0.88467, 1.06737, 1.28613, 1.54761, 1.87636, 2.31510, 2.96718, 3.43790, 4.13800, 4.52398, 5.01307, 5.35122, 5.72081, 6.99990, 8.30945, 9.47223, 11.35308),
            (0.62756, 0.90112, 1.07572, 1.38721, 1.72595, 2.19720, 2.57727, 2.91911, 3.24807, 3.56210, 3.87410, 4.18777, 4.52246, 4.85952, 5.21278, 5.59154, 6.02152, 6.48618, 7.01422, 7.64177, 8.43546, 9.50662, 10.24655, 11.23072, 11.77197, 12.47307, 12.92297, 13.47729, 15.20943, 16.83581, 18.21663, 20.31315),
            (2.75879, 3.45056, 3.82458, 4.48213, 5.11953, 5.93555, 6.55901, 7.08771, 7.58325, 8.04239, 8.48922, 8.92775, 9.38200, 9.85475, 10.33595, 10.84603, 11.38366, 11.97865, 12.67563, 13.47262, 14.42462, 15.73044, 16.58846, 17.84536, 18.48110, 19.34274, 19.87729, 20.55089, 22.34729, 24.22224, 26.18160, 28.30985),
            (5.93240, 6.94300, 7.51770, 8.39708, 9.23738, 10.31109, 11.09987, 11.77677, 12.38439, 12.95147, 13.49040, 14.03683, 14.58156, 15.11717, 15.68384, 16.27803, 16.92805, 17.63305, 18.40318, 19.31245, 20.41479, 21.88240, 22.87214, 24.23522, 24.92867, 25.83815, 26.38600, 27.02313, 29.15425, 31.11697, 33.01310, 35.77747),
            (9.60023, 10.85841, 11.55573, 12.65048, 13.64246, 14.92512, 15.86770, 16.65941, 17.35631, 18.00229, 18.63603, 19.23865, 19.83965, 20.47558, 21.11712, 21.79177, 22.51665, 23.28204, 24.14570, 25.14403, 26.32082, 27.88706, 28.93257, 30.34728, 31.10687, 32.10421, 32.70643, 33.41138, 35.64215, 37.69190, 39.62354, 42.07315),
            (13.52258, 15.06775, 15.84224, 17.08208, 18.25414, 19.69840, 20.75989, 21.65352, 22.44412, 23.16480, 23.86207, 24.54249, 25.20559, 25.88612, 26.57503, 27.29564, 28.06796, 28.90947, 29.82239, 30.88721, 32.20909, 33.92541, 35.07859, 36.66531, 37.48405, 38.51072, 39.11938, 39.88461, 42.12921, 44.38989, 46.62617, 49.34212),
            (17.79332, 19.47046, 20.37348, 21.76616, 23.05826, 24.66499, 25.80072, 26.74908, 27.56912, 28.34025, 29.09360, 29.81276, 30.54639, 31.28024, 32.02740, 32.79361, 33.61670, 34.50710, 35.49018, 36.66772, 38.04100, 39.86679, 41.10628, 42.71026, 43.55995, 44.62695, 45.30843, 46.13636, 48.54963, 50.79028, 52.86860, 55.79641),
            (22.01064, 24.07100, 24.98821, 26.59359, 27.97846, 29.69536, 30.93318, 31.94251, 32.85719, 33.68333, 34.46331, 35.25187, 36.03608, 36.82869, 37.61439, 38.45208, 39.32787, 40.28784, 41.34444, 42.55103, 44.01933, 45.92268, 47.24672, 48.92800, 49.83002, 51.01114, 51.73795, 52.49847, 55.08763, 57.61618, 59.92152, 63.22969),
            (26.76202, 28.78537, 29.79929, 31.43258, 32.92820, 34.80398, 36.09940, 37.20232, 38.15419, 39.02863, 39.86034, 40.69048, 41.49772, 42.31859, 43.17064, 44.04640, 44.99285, 46.00875, 47.11624, 48.35630, 49.87257, 51.90784, 53.25192, 55.01480, 55.93775, 57.12323, 57.86592, 58.75414, 61.36741, 63.63641, 66.41264, 68.86129),
            (31.39068, 33.49706, 34.70038, 36.39594, 38.00340, 39.89845, 41.25018, 42.41389, 43.43061, 44.37241, 45.26851, 46.14456, 46.99464, 47.83752, 48.72483, 49.63304, 50.58653, 51.61990, 52.76356, 54.09031, 55.68478, 57.67794, 59.05143, 60.87882, 61.85119, 63.09442, 63.88691, 64.79641, 67.51872, 70.10858, 73.02915, 76.31613),
            (36.09297, 38.35359, 39.60221, 41.36574, 43.01802, 45.07816, 46.54595, 47.72446, 48.80794, 49.77517, 50.71075, 51.59221, 52.49019, 53.39020, 54.29322, 55.23962, 56.24323, 57.32366, 58.52046, 59.89953, 61.56143, 63.72992, 65.16758, 67.10362, 68.14466, 69.43749, 70.22499, 71.15437, 74.03145, 76.61173, 79.28258, 82.78786),
            (41.03104, 43.35928, 44.68864, 46.58797, 48.30019, 50.38545, 51.93485, 53.16394, 54.26749, 55.27775, 56.24380, 57.16809, 58.07094, 58.99718, 59.92956, 60.88507, 61.91332, 63.02122, 64.24871, 65.68671, 67.34893, 69.55978, 71.07124, 73.05942, 74.06878, 75.36389, 76.18598, 77.13871, 80.02688, 83.02165, 85.71142, 88.91072),
        ),
        2: (
            (0.33558, 0.49413, 0.59488, 0.79592, 1.01961, 1.34875, 1.63128, 1.89144, 2.14968, 2.39696, 2.65325, 2.91389, 3.18760, 3.46602, 3.77201, 4.09917, 4.46223, 4.86349, 5.33968, 5.89968, 6.60287, 7.58353, 8.25295, 9.21054, 9.70773, 10.39831, 10.82904, 11.33414, 12.84147, 14.32240, 15.78913, 17.86500),
            (2.17145, 2.75852, 3.08334, 3.60373, 4.14546, 4.86593, 5.42206, 5.89362, 6.33200, 6.74862, 7.15683, 7.56294, 7.98234, 8.41230, 8.85979, 9.33008, 9.83841, 10.39494, 11.02138, 11.75743, 12.67026, 13.88356, 14.73201, 15.88425, 16.53306, 17.34497, 17.84225, 18.41545, 20.23731, 21.92993, 23.58513, 25.85709),
            (5.01291, 5.96392, 6.47157, 7.30612, 8.07909, 9.09260, 9.83859, 10.45571, 11.02257, 11.56006, 12.07255, 12.58833, 13.07939, 13.59937, 14.13642, 14.71277, 15.32326, 15.97510, 16.71787, 17.59473, 18.65333, 20.08697, 21.01991, 22.29201, 22.98411, 23.82362, 24.34102, 24.98442, 26.99776, 28.97261, 30.68048, 32.84884),
            (8.61156, 9.73157, 10.41070, 11.43122, 12.42482, 13.62424, 14.49329, 15.23894, 15.90185, 16.52725, 17.12724, 17.70107, 18.30795, 18.90480, 19.51419, 20.16302, 20.83576, 21.58313, 22.42413, 23.38439, 24.57328, 26.13383, 27.14615, 28.55687, 29.30466, 30.28828, 30.90143, 31.56614, 33.67769, 35.61987, 37.73768, 40.65855),
            (12.48178, 13.84929, 14.64231, 15.85162, 16.95796, 18.33049, 19.34426, 20.19605, 20.96365, 21.64972, 22.31287, 22.97003, 23.60974, 24.27155, 24.94187, 25.64453, 26.40862, 27.23003, 28.13788, 29.19063, 30.47242, 32.14833, 33.29062, 34.83183, 35.63690, 36.56836, 37.23397, 37.98800, 40.23123, 42.44384, 44.87359, 48.06797),
            (16.47610, 18.19844, 19.07650, 20.47030, 21.71910, 23.29245, 24.39461, 25.32482, 26.15557, 26.93128, 27.64877, 28.35269, 29.05007, 29.77078, 30.48453, 31.22136, 32.04797, 32.94136, 33.93721, 35.04709, 36.37895, 38.19317, 39.39063, 41.01226, 41.87345, 42.95616, 43.60311, 44.44790, 46.74142, 49.16249, 51.17135, 54.05434),
            (20.92603, 22.79769, 23.71274, 25.21858, 26.60168, 28.26075, 29.45378, 30.44627, 31.33583, 32.14971, 32.91238, 33.65608, 34.41386, 35.18209, 35.97255, 36.78232, 37.64375, 38.57601, 39.60290, 40.76444, 42.21161, 44.07035, 45.34642, 47.02124, 47.90160, 48.99766, 49.75161, 50.58752, 52.91971, 55.32968, 57.59363, 60.61336),
            (25.35051, 27.31979, 28.36401, 30.02705, 31.50997, 33.31105, 34.57934, 35.64032, 36.56328, 37.44184, 38.28313, 39.11381, 39.91408, 40.70862, 41.53060, 42.38667, 43.30588, 44.29481, 45.38522, 46.63545, 48.15460, 50.12363, 51.46340, 53.23819, 54.17274, 55.31582, 56.04923, 56.90203, 59.33018, 61.76794, 64.29567, 67.29688),
            (30.03399, 32.05435, 33.26197, 35.00979, 36.51998, 38.43268, 39.76446, 40.88766, 41.89652, 42.80423, 43.67317, 44.52359, 45.34735, 46.18740, 47.04519, 47.96703, 48.90962, 49.94141, 51.07915, 52.37583, 53.97178, 55.99610, 57.35226, 59.17467, 60.14236, 61.33533, 62.06992, 63.01022, 65.69349, 68.37412, 70.75280, 73.59741),
            (34.51228, 37.13764, 38.28386, 40.06478, 41.67337, 43.67189, 45.12807, 46.27161, 47.31307, 48.27095, 49.19965, 50.07148, 50.96335, 51.83816, 52.74239, 53.66208, 54.66143, 55.73866, 56.90491, 58.25677, 59.90330, 62.02349, 63.45169, 65.27724, 66.23396, 67.48942, 68.28430, 69.17855, 71.88612, 74.59865, 77.21115, 80.87563),
            (39.62289, 41.85552, 43.13843, 45.02066, 46.78977, 48.87911, 50.35640, 51.56683, 52.64391, 53.65581, 54.60943, 55.50908, 56.40760, 57.33693, 58.27007, 59.20119, 60.22928, 61.33164, 62.55491, 63.96951, 65.63077, 67.75861, 69.22099, 71.21671, 72.23467, 73.53129, 74.31559, 75.24753, 78.11506, 80.87209, 83.40799, 86.97526),
            (44.38731, 46.84305, 48.16645, 50.14412, 51.92334, 54.09688, 55.67561, 56.93647, 58.07559, 59.09381, 60.09201, 61.05137, 62.00768, 62.96520, 63.94091, 64.95835, 66.00496, 67.14948, 68.40299, 69.85790, 71.59506, 73.79397, 75.31639, 77.32903, 78.38207, 79.68496, 80.52615, 81.54049, 84.53331, 87.42232, 90.15595, 93.13161),
        ),
        3: (
            (0.00000, 0.00004, 0.00016, 0.00098, 0.00393, 0.01579, 0.03577, 0.06418, 0.10153, 0.14847, 0.20590, 0.27500, 0.35732, 0.45494, 0.57065, 0.70833, 0.87346, 1.07419, 1.32330, 1.64237, 2.07225, 2.70554, 3.17005, 3.84146, 4.21788, 4.70929, 5.02389, 5.41189, 6.63490, 7.87944, 9.14059, 10.82757),
            (1.35337, 1.77024, 2.03379, 2.47194, 2.94895, 3.57447, 4.08231, 4.52765, 4.94118, 5.32889, 5.71818, 6.10398, 6.49851, 6.90702, 7.32856, 7.78894, 8.28301, 8.82828, 9.44006, 10.16229, 11.06695, 12.25931, 13.08931, 14.20403, 14.85298, 15.57304, 16.07647, 16.63716, 18.36615, 20.13282, 21.84797, 23.85869),
            (4.25067, 5.14388, 5.58055, 6.32752, 7.08693, 8.04692, 8.75887, 9.36998, 9.91788, 10.43879, 10.94166, 11.43876, 11.92991, 12.45178, 12.99108, 13.55990, 14.15168, 14.82146, 15.56470, 16.42957, 17.48521, 18.88558, 19.82858, 21.11167, 21.80166, 22.63352, 23.18378, 23.84592, 25.90778, 27.83680, 29.57315, 32.30292),
            (7.76988, 8.94305, 9.55358, 10.56081, 11.49894, 12.68657, 13.54465, 14.29436, 14.95890, 15.58022, 16.17341, 16.76425, 17.33342, 17.91869, 18.52537, 19.15235, 19.82773, 20.57887, 21.41732, 22.37594, 23.54828, 25.09397, 26.15379, 27.56202, 28.28477, 29.22826, 29.82177, 30.48088, 32.65048, 34.81342, 36.85735, 39.18459),
            (11.74536, 13.16357, 13.89003, 15.04440, 16.16397, 17.55108, 18.55167, 19.39810, 20.12720, 20.80809, 21.48983, 22.13072, 22.77695, 23.42791, 24.10075, 24.80576, 25.54678, 26.36924, 27.26989, 28.31613, 29.57394, 31.25545, 32.39020, 33.93926, 34.76141, 35.73147, 36.32739, 37.04498, 39.48676, 41.64554, 43.89015, 46.96536),
            (15.91980, 17.49517, 18.34417, 19.66910, 20.89868, 22.44877, 23.56211, 24.48271, 25.31144, 26.05566, 26.77522, 27.47603, 28.18413, 28.91016, 29.63082, 30.36632, 31.17411, 32.04079, 33.00736, 34.11777, 35.48631, 37.27613, 38.45985, 40.05317, 40.89160, 41.92678, 42.57561, 43.38873, 45.78727, 47.92647, 50.07483, 52.76972),
            (20.10945, 22.00851, 23.01815, 24.50024, 25.86786, 27.49845, 28.67526, 29.66700, 30.56075, 31.36355, 32.16219, 32.92181, 33.67993, 34.41852, 35.18036, 35.97314, 36.84564, 37.76648, 38.80907, 40.00407, 41.41611, 43.29380, 44.55049, 46.24093, 47.13631, 48.27934, 49.01731, 49.76084, 52.23585, 54.61825, 56.92854, 59.93527),
            (24.68147, 26.54319, 27.66225, 29.30597, 30.72359, 32.55083, 33.82933, 34.87109, 35.84062, 36.68699, 37.50059, 38.29501, 39.08654, 39.88991, 40.70667, 41.56243, 42.44885, 43.42840, 44.51682, 45.77578, 47.25316, 49.16557, 50.46777, 52.20554, 53.12399, 54.32264, 55.04204, 55.87642, 58.57599, 61.01946, 63.46273, 66.42097),
            (29.34262, 31.46894, 32.53722, 34.26614, 35.78692, 37.71044, 39.05458, 40.16709, 41.15857, 42.07198, 42.93684, 43.77573, 44.61435, 45.46632, 46.32756, 47.24826, 48.17021, 49.20160, 50.34890, 51.62704, 53.19445, 55.17423, 56.43428, 58.24955, 59.24854, 60.43833, 61.27130, 62.15684, 64.85299, 67.46450, 70.04106, 73.04873),
            (34.11424, 36.37930, 37.54071, 39.33943, 40.97883, 42.92329, 44.34225, 45.50045, 46.53893, 47.45334, 48.34584, 49.24779, 50.11047, 50.99506, 51.89744, 52.81941, 53.79966, 54.84567, 56.02434, 57.37872, 59.02922, 61.15948, 62.52058, 64.38481, 65.34891, 66.64758, 67.44876, 68.44678, 71.36376, 73.89669, 76.65220, 79.94146),
            (38.68647, 41.20917, 42.42704, 44.35022, 46.07449, 48.15307, 49.61752, 50.82619, 51.89199, 52.91224, 53.86881, 54.82092, 55.74038, 56.62717, 57.56772, 58.52482, 59.53433, 60.61249, 61.83352, 63.26556, 64.98149, 67.16216, 68.61591, 70.62034, 71.64457, 72.89075, 73.66176, 74.59011, 77.43486, 80.28092, 82.91896, 86.48152),
            (43.65983, 46.22428, 47.46066, 49.47655, 51.26359, 53.40635, 54.95477, 56.23187, 57.31312, 58.32803, 59.29554, 60.25089, 61.18260, 62.11702, 63.07546, 64.08810, 65.14546, 66.28626, 67.54547, 69.03604, 70.72107, 72.99550, 74.50092, 76.50444, 77.53230, 78.90679, 79.72605, 80.67276, 83.54748, 86.26080, 88.66230, 91.93476),
        ),
        4: (
            (1.02406, 1.34133, 1.53398, 1.88891, 2.26579, 2.79641, 3.21809, 3.59716, 3.95277, 4.29953, 4.63685, 4.97926, 5.32461, 5.68973, 6.06798, 6.49440, 6.94119, 7.45399, 8.01748, 8.69895, 9.52837, 10.68079, 11.44558, 12.49022, 13.06609, 13.82635, 14.27924, 14.80947, 16.52203, 18.13109, 19.85541, 21.59966),
            (3.58189, 4.31733, 4.73738, 5.42162, 6.08623, 6.99401, 7.64445, 8.21508, 8.72752, 9.21973, 9.69583, 10.15786, 10.63360, 11.11527, 11.61182, 12.14648, 12.72184, 13.34838, 14.06373, 14.90124, 15.90139, 17.24987, 18.13990, 19.37814, 20.07787, 20.93141, 21.40809, 21.99809, 24.02598, 26.02022, 27.70488, 30.05917),
            (7.05292, 8.04660, 8.63246, 9.59035, 10.44244, 11.55490, 12.37586, 13.06121, 13.67869, 14.27408, 14.83497, 15.38907, 15.94268, 16.50995, 17.08489, 17.71063, 18.36274, 19.07995, 19.86910, 20.77259, 21.89140, 23.36294, 24.35946, 25.72623, 26.42543, 27.36617, 27.97244, 28.63760, 30.77828, 32.87167, 34.87310, 37.28341),
            (10.77623, 12.03041, 12.82773, 13.92655, 14.95023, 16.26173, 17.20639, 18.01242, 18.72254, 19.37945, 20.02258, 20.65321, 21.28006, 21.90389, 22.56464, 23.24729, 23.97582, 24.77560, 25.65746, 26.65538, 27.90760, 29.54544, 30.64605, 32.11218, 32.80658, 33.79104, 34.37282, 35.15161, 37.30471, 39.45983, 41.50195, 44.01399),
            (14.85084, 16.31451, 17.13492, 18.42422, 19.60515, 21.08378, 22.15256, 23.03628, 23.83347, 24.57209, 25.29300, 25.97723, 26.66051, 27.36356, 28.07877, 28.82266, 29.60895, 30.46794, 31.40960, 32.51376, 33.85110, 35.60662, 36.74852, 38.31309, 39.13547, 40.24931, 40.89006, 41.65912, 43.99317, 46.18949, 48.53483, 51.33499),
            (19.14589, 20.91971, 21.79522, 23.18373, 24.53111, 26.12054, 27.27359, 28.23111, 29.09897, 29.88768, 30.66730, 31.41567, 32.15986, 32.88955, 33.65558, 34.44095, 35.28074, 36.17860, 37.17421, 38.33959, 39.74123, 41.57074, 42.81832, 44.54337, 45.41355, 46.52451, 47.23979, 48.04359, 50.37365, 52.67749, 54.87095, 57.77734),
            (23.35533, 25.42894, 26.43028, 27.98969, 29.44640, 31.17033, 32.39644, 33.40968, 34.33370, 35.17526, 35.96897, 36.75978, 37.53955, 38.31372, 39.11786, 39.95810, 40.85666, 41.80838, 42.85740, 44.09770, 45.54829, 47.44971, 48.74943, 50.45398, 51.40976, 52.57441, 53.26225, 54.14579, 56.60916, 58.97465, 61.40507, 64.04609),
            (27.98187, 30.14278, 31.22653, 32.85603, 34.37755, 36.22484, 37.55888, 38.67144, 39.62039, 40.52514, 41.37124, 42.20260, 43.02520, 43.84470, 44.70486, 45.56766, 46.48407, 47.50844, 48.61225, 49.88610, 51.47015, 53.52046, 54.84708, 56.66628, 57.57432, 58.70368, 59.38403, 60.32460, 62.89264, 65.40182, 67.87261, 70.84685),
            (32.62386, 34.83893, 36.03039, 37.82365, 39.46916, 41.40216, 42.82460, 43.99426, 45.03735, 45.97311, 46.85291, 47.73633, 48.60261, 49.46982, 50.35535, 51.27238, 52.23092, 53.28464, 54.41859, 55.77448, 57.41012, 59.47018, 60.77957, 62.63097, 63.60308, 64.92034, 65.65471, 66.57559, 69.43399, 72.02884, 74.47795, 77.95787),
            (37.23253, 39.77007, 40.93874, 42.85662, 44.57189, 46.61655, 48.06434, 49.29667, 50.38258, 51.36841, 52.29753, 53.20307, 54.09693, 54.98922, 55.91733, 56.89070, 57.89777, 58.98011, 60.21641, 61.60723, 63.22939, 65.38260, 66.82650, 68.76738, 69.77102, 71.08569, 71.88768, 72.82280, 75.67782, 78.29957, 81.05811, 84.24364),
            (42.23922, 44.66559, 45.97028, 47.91697, 49.71295, 51.90245, 53.41333, 54.67430, 55.78599, 56.81240, 57.78249, 58.72118, 59.65216, 60.57819, 61.54630, 62.53909, 63.60852, 64.75640, 65.98987, 67.39292, 69.05737, 71.26737, 72.75679, 74.70731, 75.77994, 77.15506, 77.96516, 79.01474, 82.01342, 84.65081, 87.28448, 90.69401),
            (47.32782, 49.72320, 51.07847, 53.10169, 55.00729, 57.22310, 58.80711, 60.08517, 61.24366, 62.29236, 63.29908, 64.27387, 65.23176, 66.18842, 67.18394, 68.17498, 69.26058, 70.44281, 71.73690, 73.20477, 74.97312, 77.28014, 78.79209, 80.89565, 81.93613, 83.33348, 84.18074, 85.14977, 88.06135, 90.84771, 94.00283, 97.65311),
        ),
        5: (
            (0.00000, 0.00004, 0.00016, 0.00098, 0.00393, 0.01579, 0.03577, 0.06418, 0.10153, 0.14847, 0.20590, 0.27500, 0.35732, 0.45494, 0.57065, 0.70833, 0.87346, 1.07419, 1.32330, 1.64237, 2.07225, 2.70554, 3.17005, 3.84146, 4.21788, 4.70929, 5.02389, 5.41189, 6.63490, 7.87944, 9.14059, 10.82757),
            (2.10548, 2.71976, 3.07290, 3.67138, 4.27130, 5.04023, 5.64364, 6.17015, 6.65941, 7.11727, 7.57602, 8.02252, 8.47239, 8.93983, 9.43310, 9.94525, 10.51446, 11.11984, 11.81713, 12.63465, 13.62947, 14.94494, 15.87270, 17.09320, 17.74001, 18.58942, 19.13837, 19.79633, 21.80289, 23.62135, 25.45785, 27.85705),
            (5.71525, 6.69346, 7.26287, 8.15475, 8.99471, 10.07496, 10.89647, 11.58485, 12.18320, 12.76235, 13.32381, 13.85463, 14.40270, 14.98167, 15.55966, 16.16813, 16.83037, 17.54429, 18.34642, 19.26136, 20.40719, 21.92167, 22.91882, 24.26719, 24.99398, 25.96608, 26.50007, 27.23000, 29.30518, 31.27403, 33.30468, 35.73260),
            (9.68326, 10.87354, 11.55882, 12.66462, 13.70334, 15.00894, 15.95626, 16.76927, 17.47547, 18.14692, 18.79411, 19.40548, 20.03389, 20.65701, 21.29352, 21.97840, 22.70189, 23.46891, 24.34369, 25.37820, 26.60823, 28.22386, 29.33246, 30.79909, 31.59045, 32.58713, 33.19003, 33.92705, 36.06608, 38.14186, 40.35541, 42.89284),
            (13.70799, 15.29516, 16.08765, 17.36181, 18.51321, 19.97874, 21.01869, 21.90954, 22.68798, 23.41578, 24.11627, 24.80032, 25.49481, 26.20179, 26.89850, 27.63261, 28.41095, 29.27754, 30.21299, 31.34064, 32.64218, 34.38514, 35.55254, 37.13771, 37.96090, 38.94726, 39.60246, 40.41795, 42.83591, 45.13388, 47.49958, 50.22209),
            (18.25368, 19.88638, 20.72919, 22.14451, 23.45213, 25.03395, 26.21926, 27.16965, 28.01543, 28.80855, 29.55751, 30.28223, 31.03530, 31.77687, 32.55920, 33.35668, 34.20249, 35.11395, 36.12398, 37.27031, 38.67729, 40.51115, 41.77402, 43.41644, 44.31887, 45.37993, 46.08443, 46.94524, 49.38345, 51.84820, 54.07257, 56.87346),
            (22.76866, 24.50710, 25.49794, 27.08362, 28.46684, 30.22313, 31.41772, 32.44363, 33.35422, 34.18405, 34.98471, 35.78371, 36.56291, 37.34791, 38.16714, 38.99712, 39.86308, 40.80836, 41.87279, 43.10866, 44.59425, 46.49492, 47.74542, 49.41523, 50.36558, 51.49320, 52.26788, 53.06010, 55.66765, 58.24334, 60.56778, 63.54990),
            (27.00349, 29.24104, 30.26861, 31.92729, 33.41199, 35.30093, 36.63583, 37.71477, 38.68093, 39.58582, 40.42705, 41.23328, 42.05592, 42.88955, 43.72888, 44.59437, 45.53080, 46.51772, 47.63659, 48.91615, 50.42580, 52.39061, 53.72066, 55.53721, 56.46740, 57.72224, 58.46829, 59.38370, 62.04589, 64.36387, 67.09272, 69.76716),
            (31.82818, 34.11498, 35.27160, 37.05733, 38.61692, 40.56226, 41.94713, 43.08218, 44.08609, 45.02176, 45.92835, 46.79574, 47.64819, 48.51761, 49.39633, 50.32665, 51.29594, 52.35606, 53.50608, 54.82519, 56.41585, 58.54574, 59.98066, 61.82063, 62.80805, 64.01417, 64.76543, 65.77463, 68.43683, 71.00384, 73.64453, 76.37620),
            (36.47331, 38.90849, 40.17351, 42.02681, 43.67664, 45.74791, 47.21549, 48.43366, 49.50397, 50.48382, 51.42796, 52.35232, 53.24457, 54.14283, 55.07969, 56.03769, 57.02981, 58.12213, 59.30401, 60.69719, 62.34645, 64.49457, 65.95161, 67.93920, 68.94395, 70.27813, 71.07826, 71.91039, 74.73973, 77.42113, 79.85778, 82.84029),
            (41.11045, 43.95899, 45.22013, 47.16245, 48.88955, 51.09943, 52.56901, 53.80571, 54.89744, 55.91017, 56.88720, 57.83522, 58.76608, 59.70336, 60.63534, 61.63563, 62.67678, 63.77642, 65.06100, 66.48133, 68.15622, 70.37356, 71.84479, 73.86363, 74.90048, 76.25236, 77.07093, 78.04842, 80.87878, 83.59914, 86.21442, 89.42974),
            (46.43215, 48.92033, 50.19900, 52.17356, 54.08572, 56.33695, 57.92087, 59.24836, 60.41392, 61.44007, 62.42214, 63.36576, 64.34251, 65.28822, 66.28045, 67.30073, 68.36168, 69.54489, 70.85190, 72.28892, 74.01364, 76.35157, 77.86882, 79.92413, 80.99884, 82.35564, 83.14871, 84.10701, 87.11066, 90.11077, 93.09772, 96.36573),
        ),
    },
}
