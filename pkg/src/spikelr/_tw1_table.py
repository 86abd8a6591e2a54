"""Tracy-Widom (beta = 1) CDF on a uniform grid.

Generated by scripts/gen_tw1_table.py from the Painleve II
representation; do not edit by hand. See that script for the
construction and the external cross-checks.
"""
S_LEFT = -10.0
S_RIGHT = 8.0
POINTS = 513
CDF_VALUES = (
    3.4123979282763226e-18, 4.6119285378717322e-18, 6.2311526831436061e-18, 8.4141386371203567e-18,
    1.1352896983594231e-17, 1.5302697658015503e-17, 2.0602046512129668e-17, 2.7698660435618939e-17,
    3.7183140563079728e-17, 4.9832493555247309e-17, 6.6666212084281025e-17, 8.9018322272965766e-17,
    1.1862966800404071e-16, 1.577657656741679e-16, 2.0936687139157148e-16, 2.7723850742434155e-16,
    3.6629265788305971e-16, 4.8285223902876031e-16, 6.3503436590445308e-16, 8.3323148029405782e-16,
    1.0907137029696586e-15, 1.4243809796688533e-15, 1.8556998922712715e-15, 2.4118676315582739e-15,
    3.1272548560896705e-15, 4.0451903399719857e-15, 5.2201638735596008e-15, 6.7205403719103506e-15,
    8.6318982621246478e-15, 1.1061129852167434e-14, 1.4141471686228e-14, 1.8038670364147144e-14,
    2.2958535917570068e-14, 2.9156193171612218e-14, 3.6947415027229555e-14, 4.672251476143e-14,
    5.8963393356398683e-14, 7.4264490417544118e-14, 9.3358584185931911e-14, 1.1714864137865921e-13,
    1.4674725004329007e-13, 1.8352560269877246e-13, 2.2917456567335233e-13, 2.8578111655446677e-13,
    3.559244116356119e-13, 4.4279703329800458e-13, 5.5035866002926323e-13, 6.8353162567030796e-13,
    8.4845075288161181e-13, 1.0527836712120807e-12, 1.3061428358038691e-12, 1.6206170007668585e-12,
    2.0114584228909733e-12, 2.4979731526377024e-12, 3.1046761449344326e-12, 3.8627915226418793e-12,
    4.812202330549624e-12, 6.0039850094772184e-12, 7.5037034688770617e-12, 9.3956883713151618e-12,
    1.1788591984764109e-11, 1.4822591325845782e-11, 1.8678716803546187e-11, 2.3590915720504817e-11,
    2.9861626623426643e-11, 3.7881849981459869e-11, 4.8156963240536086e-11, 6.1339856408628605e-11,
    7.8273373082669962e-11, 1.0004454951291733e-10, 1.2805377295538693e-10, 1.6410275659427408e-10,
    2.1050618343056949e-10, 2.7023304337317632e-10, 3.4708512119272104e-10, 4.4592184098316395e-10,
    5.7294279780641271e-10, 7.3604188268589099e-10, 9.4525001888927563e-10, 1.2132872756214774e-09,
    1.5562496258173303e-09, 1.9944610023314177e-09, 2.5535277355011494e-09, 3.2656401028606775e-09,
    4.1711747903909026e-09, 5.3206627849132515e-09, 6.7771998491438433e-09, 8.6193915681659343e-09,
    1.0944942327846701e-08, 1.3875017859088596e-08, 1.7559534564641202e-08, 2.2183556187953533e-08,
    2.7975009980766824e-08, 3.5213970917915461e-08, 4.4243804281498482e-08, 5.548450472339682e-08,
    6.9448624393582754e-08, 8.6760244612257069e-08, 1.0817751562524705e-07, 1.3461936801033844e-07,
    1.6719708811736964e-07, 2.0725154937128044e-07, 2.5639700219269981e-07, 3.1657244854432928e-07,
    3.9010176352260818e-07, 4.7976387676628549e-07, 5.8887449150277577e-07, 7.2138099941954557e-07,
    8.8197244582723215e-07, 1.0762066121473954e-06, 1.3106565118826226e-06, 1.5930788419921856e-06,
    1.932607193734705e-06, 2.339973105219012e-06, 2.8277583312835328e-06, 3.4106820137803042e-06,
    4.1059267554686071e-06, 4.9335079314951182e-06, 5.9166909114979361e-06, 7.0824612098542359e-06,
    8.4620529280395194e-06, 1.0091541197454778e-05, 1.20125046688603e-05, 1.4272764420787582e-05,
    1.692720596756025e-05, 2.0038691332194359e-05, 2.3679068403608351e-05, 2.7930285012016241e-05,
    3.2885615326164507e-05, 3.8651006289101746e-05, 4.5346551860096252e-05, 5.3108102806005232e-05,
    6.2089019680411239e-05, 7.2462076430761634e-05, 8.4421521773681373e-05, 9.8185305067801705e-05,
    0.00011399747288212408, 0.00013213074179896733, 0.00015288925219274319, 0.00017661150678582004,
    0.00020367349669323149, 0.00023449201642327319, 0.00026952816790042723, 0.00030929105201299065,
    0.00035434164447333227, 0.00040529685089679446, 0.00046283373398606995, 0.00052769390352498528,
    0.00060068805759016608, 0.00068270066094726974, 0.00077469474407339701, 0.00087771680360205768,
    0.00099290178230259838, 0.0011214781039445771, 0.0012647727356413512, 0.0014242162474853487,
    0.001601347836572623, 0.0017978202798393486, 0.0020154047775800149, 0.0022559956470798817,
    0.0025216148235470029, 0.0028144161234787382, 0.0031366892237937429, 0.0034908633085407982,
    0.0038795103337937497, 0.0043053478604839239, 0.0047712414044584163, 0.0052802062529842134,
    0.0058354086973286977, 0.0064401666318584976, 0.0070979494714672681, 0.0078123773409474019,
    0.0085872194922890239, 0.0094263919087136556, 0.010333954057643807, 0.011314104758691325,
    0.012371177137106119, 0.013509632637996023, 0.014734054081917483, 0.016049137748226201,
    0.017459684478616469, 0.018970589799829466, 0.020586833071203833, 0.022313465669870507,
    0.024155598233459242, 0.026118386987666931, 0.028207019193336576, 0.030426697755216777,
    0.032782625041792718, 0.035279985972887867, 0.037923930438702229, 0.040719555120651979,
    0.043671884790794549, 0.046785853172553689, 0.050066283450992552, 0.053517868525796666,
    0.057145151104471999, 0.060952503737124859, 0.064944108896983863, 0.069123939213382654,
    0.073495737965227029, 0.078062999944035941, 0.082828952795221261, 0.08779653894578783,
    0.092968398224679658, 0.098346851279864769, 0.10393388389248297, 0.10973113228494565,
    0.11573986951443126, 0.12196099303861135, 0.12839501353310953, 0.13504204503473144,
    0.14190179647577236, 0.14897356466860892, 0.15625622878951598, 0.16374824640377128,
    0.17144765106390331, 0.17935205150470501, 0.18745863244893005, 0.19576415702765129,
    0.20426497081139477, 0.21295700743659643, 0.22183579580570814, 0.23089646882733836,
    0.24013377365599081, 0.24954208338274864, 0.25911541011843225, 0.26884741940668072,
    0.27873144589379423, 0.28876051017817916, 0.29892733675621885, 0.30922437297503025,
    0.31964380889987337, 0.33017759799856122, 0.34081747854289129, 0.35155499562484005,
    0.36238152368297666, 0.37328828943413339, 0.38426639510440974, 0.39530684185435733,
    0.40640055329421909, 0.41753839898614792, 0.42871121783300425, 0.43990984125621713,
    0.45112511606785743, 0.46234792694620952, 0.47356921842851868, 0.48478001633941997,
    0.49597144857554826, 0.50713476517886913, 0.51826135762942827, 0.52934277729684032,
    0.54037075299846704, 0.55133720761429927, 0.56223427371159029, 0.57305430815555081,
    0.58378990566148614, 0.59443391127048173, 0.60497943173788593, 0.61541984580176945,
    0.62574881334764587, 0.63596028346166178, 0.64604850136277558, 0.65600801423837873,
    0.66583367600430521, 0.67552065096641689, 0.68506441647029304, 0.69446076451772976,
    0.7037058023860463, 0.71279595230577619, 0.72172795021821978, 0.73049884363169793,
    0.7391059886779453, 0.74754704634674252, 0.75581997797048095, 0.7639230400242859,
    0.77185477824794646, 0.77961402116713041, 0.78719987307244133, 0.79461170646343582,
    0.80184915403858026, 0.80891210028315852, 0.81580067266739387, 0.82251523254674419,
    0.82905636578502984, 0.83542487313889213, 0.84162176046687798, 0.84764822879529378,
    0.85350566427596042, 0.85919562808977656, 0.86471984631885856, 0.87008019982858176,
    0.87527871419307879, 0.88031754969685039, 0.88519899143806802, 0.8899254395623144,
    0.89449939965603387, 0.89892347331760492, 0.90320034892840839, 0.90733279265335665,
    0.91132363966565211, 0.91517578563600321, 0.91889217848820948, 0.92247581042495219,
    0.92592971026070847, 0.92925693603449389, 0.93246056793281473, 0.93554370152960276,
    0.93850944132897884, 0.94136089462935923, 0.94410116571217884, 0.9467333503266081,
    0.94926053050765069, 0.9516857697052854, 0.95401210820860471, 0.95624255889794696,
    0.95838010328349343, 0.96042768782935528, 0.96238822058241469, 0.96426456807695538,
    0.96605955250021602, 0.96777594913910991, 0.96941648407728231, 0.97098383212635497,
    0.97248061500971728, 0.97390939977294366, 0.97527269740540745, 0.97657296167548113,
    0.97781258816806971, 0.97899391350216325, 0.98011921473492258, 0.98119070893501725,
    0.98221055291267134, 0.98318084310315645, 0.98410361559043202, 0.98498084626104299,
    0.98581445108326826, 0.9866062864989823, 0.98735814992076465, 0.98807178032727827,
    0.98874885894607889, 0.98939101001886132, 0.98999980164017887, 0.99057674666242668,
    0.99112330366109114, 0.99164087795227285, 0.99213082265747055, 0.99259443980898665,
    0.99303298149019015, 0.99344765100578658, 0.99383960407611527, 0.99420995005153545,
    0.9945597531419228, 0.99489003365698292, 0.99520176925395409, 0.99549589618809298,
    0.9957733105634331, 0.99603486958019849, 0.99628139277571792, 0.9965136632570798,
    0.99673242892164415, 0.99693840366431774, 0.99713226856936954, 0.99731467308423261,
    0.99748623617472165, 0.99764754745963691, 0.9977991683226799, 0.99794163300231842,
    0.99807544965742367, 0.99820110140741458, 0.99831904734816379, 0.99842972354088366,
    0.998533543974231, 0.99863090150053824, 0.99872216874449371, 0.99880769898404875,
    0.99888782700536183, 0.99896286992926642, 0.999033128010829, 0.99909888541263492,
    0.99916041095079844, 0.99921795881437636, 0.9992717692596722, 0.99932206927755629,
    0.99936907323635304, 0.9994129834999893, 0.99945399102130039, 0.99949227591226586,
    0.9995280079905412, 0.99956134730330481, 0.99959244462950936, 0.99962144196021052,
    0.9996484729582773, 0.99967366339791475, 0.99969713158415718, 0.999718988753861,
    0.99973933945799764, 0.99975828192623151, 0.99977590841452812, 0.99979230553580267,
    0.99980755457505199, 0.99982173178889844, 0.99983490869040814, 0.99984715231985721,
    0.99985852550155629, 0.99986908708794675, 0.99987889219094517, 0.99988799240137138,
    0.99989643599692057, 0.99990426813894906, 0.9999115310590132, 0.99991826423517016,
    0.99992450455883741, 0.99993028649245919, 0.99993564221838216, 0.99994060177961674,
    0.99994519321252151, 0.9999494426721377, 0.99995337455026678, 0.99995701158675332,
    0.99996037497444534, 0.99996348445788474, 0.99996635842635939, 0.99996901400132232,
    0.99997146711862772, 0.9999737326059206, 0.99997582425522735, 0.99997775489127705,
    0.99997953643552739, 0.99998117996626923, 0.99998269577508458, 0.9999840934196762,
    0.99998538177349561, 0.99998656907216443, 0.99998766295693675, 0.99998867051547058,
    0.99998959831989542, 0.99999045246247786, 0.99999123858897343, 0.99999196192972406,
    0.99999262732881256, 0.9999932392712475, 0.99999380190831277, 0.99999431908133163,
    0.9999947943437002, 0.99999523098152177, 0.99999563203284902, 0.99999600030555169,
    0.99999633839404545, 0.9999966486948203, 0.99999693342087215, 0.99999719461519754,
    0.99999743416331788, 0.99999765380488681, 0.99999785514457951, 0.99999803966211187,
    0.99999820872157896, 0.99999836358016214, 0.99999850539618429, 0.99999863523655452,
    0.99999875408376693, 0.99999886284229567, 0.99999896234455277, 0.99999905335644035,
    0.99999913658247586, 0.99999921267050584, 0.99999928221614021, 0.99999934576681071,
    0.99999940382550856, 0.99999945685428104, 0.99999950527746218, 0.99999954948463998,
    0.99999958983338466, 0.99999962665184072, 0.99999966024104003, 0.99999969087706131,
    0.9999997188130435, 0.99999974428103888, 0.99999976749370945, 0.99999978864587258,
    0.99999980791599696, 0.99999982546751176, 0.99999984145002363, 0.99999985600045682,
    0.99999986924410633, 0.99999988129559503, 0.99999989225974317, 0.99999990223238411,
    0.99999991130113841, 0.99999991954607659, 0.99999992704034568, 0.99999993385075669,
    0.99999994003832482, 0.99999994565875805, 0.99999995076290249, 0.99999995539713959,
    0.9999999596037995, 0.99999996342149311, 0.99999996688542148, 0.99999997002766994,
    0.9999999728774811, 0.9999999754615041, 0.99999997780401573, 0.99999997992712442,
    0.99999998185095518, 0.99999998359383435, 0.99999998517244171, 0.99999998660195033,
    0.99999998789616118, 0.99999998906762566, 0.99999999012775764, 0.99999999108693149,
    0.99999999195457534,
)
