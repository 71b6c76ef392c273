"""Generated by tools/gen_olver_tables.py -- do not edit by hand."""

import numpy as np

ZETA_CUT = 0.45

CHEB_A1 = np.array([-0.004370679162358202, -0.0006133658809653601, 7.449104281937243e-05, 1.4984689029279658e-05, 7.131859477402598e-07, -7.043623885619551e-08, -1.2520448270732033e-08, -5.271583364246184e-10, 5.468909342483768e-11, 8.905342957828091e-12, 3.4612533728152435e-13, -3.7949688962500965e-14, -5.82443432151428e-15, -2.1298844847084778e-16, 2.4667621782802725e-17, 3.618951617431796e-18, 1.2560776195666168e-19, -1.53759219323457e-20, -2.1724977867548983e-21, -7.186062521771162e-23, 9.309628899405893e-24, 1.2724165048449901e-24, 4.017861934657393e-26, -5.517487138080531e-27, -7.315712521190931e-28, -2.2060449336741267e-29, 3.216740837389554e-30, 4.145870833321304e-31, 1.193322290800286e-32, -1.8510551583799474e-33, -2.322446084687581e-34, -6.37385439800306e-36, 1.0538856337472869e-36, 1.288678923489359e-37, 3.366931166409789e-39, -5.947143821986514e-40, -7.093899629576048e-41, -1.760903784316845e-42, 3.33081063975556e-43, 3.878664483008431e-44, 9.125042515051294e-46])

CHEB_B0 = np.array([0.01815887267286255, 0.003974455680338558, 0.00015847463707844233, -8.620117088280817e-06, -1.5213314287660498e-06, -6.216791635158386e-08, 4.591744995299043e-09, 7.385958812983617e-10, 2.8373538188198273e-11, -2.4446046450345977e-12, -3.701639900804958e-13, -1.350261676926481e-14, 1.2879781608470601e-15, 1.8690130283705934e-16, 6.520266886690785e-18, -6.743909841039426e-19, -9.457219754942246e-20, -3.165500000208528e-21, 3.518639921953445e-22, 4.7886283649972716e-23, 1.539448240985231e-24, -1.8317930423726778e-25, -2.425168464760328e-26, -7.487136561893008e-28, 9.521513234354152e-29, 1.228199550667403e-29, 3.6384251955775366e-31, -4.943302197012726e-32, -6.219417399444702e-33, -1.765705234379904e-34, 2.5638843100820113e-35, 3.148909459717026e-36, 8.553642671995926e-38, -1.3286336974812824e-38, -1.5939887035191068e-39, -4.134834081356014e-41, 6.879792594460951e-42, 8.067048807256556e-43, 1.9938436402430576e-44, -3.559885414181287e-45, -4.081700983491584e-46])

CHEB_B1 = np.array([-0.0015289331545588116, -0.0006153296508805567, -3.525021128090495e-05, 4.070222607436257e-06, 8.486954785752323e-07, 4.116513407534715e-08, -4.7537667845948456e-09, -8.667967307555984e-10, -3.735668745286304e-11, 4.431817045013782e-12, 7.414563313705591e-13, 2.9395289592344524e-14, -3.622595193924251e-15, -5.696695511011613e-16, -2.1126399981813726e-17, 2.72195132576669e-18, 4.0754765666713273e-19, 1.4258750261877396e-20, -1.9294012629727245e-21, -2.7715042796339543e-22, -9.188105741477848e-24, 1.3103951599207809e-24, 1.8147262441822527e-25, 5.712812273212904e-27, -8.613394782192488e-28, -1.153876319839274e-28, -3.451780528354177e-30, 5.517056769511536e-31, 7.166870992929722e-32, 2.0368761443466086e-33, -3.460320993761647e-34, -4.3669706254421313e-35, -1.1780494779101563e-36, 2.1328564441886187e-37, 2.6187737744046097e-38, 6.695299858987919e-40, -1.2954723792483714e-40, -1.5493313536788677e-41, -3.746037247879713e-43, 7.768713500559497e-44, 9.025508047285626e-45])

CHEB_C0 = np.array([0.15840472888042814, 0.011181420386659514, -0.0003356999425487258, -5.2092715078302536e-05, -2.999358483766888e-07, 3.176608955155887e-07, 2.3509003114875922e-08, -3.875328128438932e-10, -1.8097056591705467e-10, -1.0997533843872544e-11, 3.4015701450938996e-13, 9.70181170852185e-14, 5.250234869817596e-15, -2.2047212389564667e-16, -5.086715771613971e-17, -2.530772249740096e-18, 1.2993379244452298e-19, 2.6377166622546657e-20, 1.2257445836275677e-21, -7.330106339140456e-23, -1.359107745024889e-23, -5.950884440721628e-25, 4.0362781033573206e-26, 6.974577053169335e-27, 2.8921931189534326e-28, -2.1892614160922608e-29, -3.569199376111263e-30, -1.4059951274394705e-31, 1.1753911241007574e-32, 1.8228003978708246e-33, 6.832924060989476e-35, -6.26448298083714e-36, -9.294551641219853e-37, -3.3182531323154577e-38, 3.320442174624605e-39, 4.733418721850328e-40, 1.6096764788147202e-41, -1.752433737729212e-42, -2.408088079914818e-43, -7.797526071536865e-45, 9.217002493007377e-46])

CHEB_C1 = np.array([-0.002091763490854149, -0.00013059789383702443, 7.691812082499402e-05, 7.836886552844088e-06, -5.480718076058477e-07, -1.6793911148719624e-07, -1.0452691818006377e-08, 8.239008586780553e-10, 1.8779821899760888e-10, 9.776159913621247e-12, -8.489444782883753e-13, -1.6709850795343151e-13, -7.77896692685426e-15, 7.334417387840813e-16, 1.3127544527260352e-16, 5.620336638354652e-18, -5.711720644924205e-19, -9.528297918178984e-20, -3.805004121642478e-21, 4.1523930222047287e-22, 6.546162857150193e-23, 2.457294227925779e-24, -2.874203612854603e-25, -4.319180422076622e-26, -1.5307493084167865e-27, 1.91745837078419e-28, 2.762734967181851e-29, 9.266249146624857e-31, -1.2429163472641967e-31, -1.7242283341033347e-32, -5.478742745700895e-34, 7.872688283076375e-35, 1.0547904984304552e-35, 3.1755996051576924e-37, -4.892782392600057e-38, -6.346469479553183e-39, -1.8092574085347845e-40, 2.9928221996707e-41, 3.7654582238261253e-42, 1.015224665901432e-43, -1.80607315973641e-44])

CHEB_D1 = np.array([0.007269324119539917, 0.0014461966779418158, -3.34152943757146e-05, -1.7086293801977473e-05, -1.1376463941563382e-06, 5.4646980259605493e-08, 1.4417853301927344e-08, 7.858290282158481e-10, -4.85867576650499e-11, -1.0302582169233882e-11, -4.991032019005256e-13, 3.5959076899262994e-14, 6.7585965038282304e-15, 3.00945601101246e-16, -2.4301841429082127e-17, -4.2091049622451626e-18, -1.7510900756165714e-19, 1.5557018026000794e-20, 2.531630994155847e-21, 9.926508435655119e-23, -9.606123467207845e-24, -1.4852168348372947e-24, -5.51535490254416e-26, 5.780429153711287e-27, 8.551678028832044e-28, 3.015655849621846e-29, -3.41134639727598e-30, -4.852634074662478e-31, -1.6271260481276752e-32, 1.9828050738263056e-33, 2.7215741955534857e-34, 8.680376253941562e-36, -1.1384260518855997e-36, -1.51177516848705e-37, -4.5850106206755045e-39, 6.470425418653805e-40, 8.330248560235315e-41, 2.4002802918677366e-42, -3.646400915708939e-43, -4.558834685318118e-44, -1.2462669501202922e-45])

# zeta(1+e) = -2**(1/3) * e * (Q[0] + Q[1] e + Q[2] e^2 + ...)
ZETA_Q = np.array([1.0, -0.3, 0.18285714285714286, -0.13168253968254148, 0.1026364873222052, -0.0838786381832103, 0.07077425964314621, -0.061115062573542274, 0.0537101611339334, -0.04785792503264513, 0.04312337870556127, -0.03960902084359087, 0.03633244722368289])
