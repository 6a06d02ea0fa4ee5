// Generated by tests/oracle/gen_reference.py; do not edit by hand.
#pragma once

namespace modstruve::reference {

struct ScalarRef {
  double a;
  double value;
};

struct StruveRef {
  double nu;
  double x;
  double value;
  double d1;
  double d2;
};

struct PairRef {
  double nu;
  double x;
  double value;
};

inline constexpr ScalarRef kLogGamma[] = {
    {1e-08, 1.84206807381802093e+01},
    {0.1, 2.25271265173420598e+00},
    {0.5, 5.72364942924700082e-01},
    {1, 0.00000000000000000e+00},
    {1.5, -1.20782237635245218e-01},
    {2, 0.00000000000000000e+00},
    {2.5, 2.84682870472919181e-01},
    {3.7, 1.42807232666538808e+00},
    {9.99, 1.27793152143501931e+01},
    {10, 1.28018274800814691e+01},
    {17.3, 3.15156241781752904e+01},
    {50.5, 1.46519255490720639e+02},
    {170.5, 7.04004427734204683e+02},
    {1000, 5.90522042320918081e+03},
};

inline constexpr ScalarRef kDigamma[] = {
    {0.001, -1.00057557193181026e+03},
    {0.1, -1.04237549404110759e+01},
    {0.5, -1.96351002602142355e+00},
    {1, -5.77215664901532866e-01},
    {1.4616321449683622, -9.24126552172942726e-17},
    {2, 4.22784335098467134e-01},
    {5.5, 1.61109314858175123e+00},
    {6, 1.70611766843180046e+00},
    {20, 2.97052399224214891e+00},
    {100, 4.60016185273808720e+00},
};

inline constexpr ScalarRef kRecipGamma[] = {
    {-3.5, 3.70249414203215066e+00},
    {-2.5, -1.05785546915204298e+00},
    {-1.5, 4.23142187660817237e-01},
    {-0.999, -9.99575983185249737e-04},
    {-0.5, -2.82094791773878140e-01},
    {-0.1, -9.35778720912872758e-02},
    {0.3, 3.34272752564190534e-01},
    {1.0, 1.00000000000000000e+00},
    {5.5, 1.91048324587600009e-02},
    {30.0, 1.13099628864477159e-31},
    {100.0, 1.07151028812546699e-156},
};

inline constexpr StruveRef kStruve[] = {
    {-2.4, 0.001, -4.46476708982384207e+03, 6.25067557937443163e+06, -1.50016203983193893e+10},
    {-2.4, 0.05, -1.86654846493746973e+01, 5.22981117315899155e+02, -2.50988538683494335e+04},
    {-2.4, 0.1, -7.06294511395214020e+00, 9.91485590686200027e+01, -2.37785641617989404e+03},
    {-2.4, 1.0, -1.73893100887960117e-01, 5.77514487919843611e-01, -6.82542168730656873e-01},
    {-2.4, 5.0, 1.44946012365326400e+01, 1.49164574690637757e+01, 1.48553645410761703e+01},
    {-2.4, 10.0, 2.08100786347999656e+03, 2.03989130344270347e+03, 1.99688521224179181e+03},
    {-2.4, 20.0, 3.75806494669174403e+07, 3.69128953735239506e+07, 3.62761660506052300e+07},
    {-2.4, 30.0, 7.08982760231898682e+11, 6.99409068980501587e+11, 6.90206614264699463e+11},
    {-2.4, 50.0, 2.76681404903556284e+20, 2.74225600231276642e+20, 2.71834366855828570e+20},
    {-1.9, 0.001, -2.83459553515177163e+02, 2.55113834380131186e+05, -4.84716025483972788e+08},
    {-1.9, 0.05, -8.37462677288951873e+00, 1.51092879844816480e+02, -5.73382663212254647e+03},
    {-1.9, 0.1, -4.47378293919275016e+00, 4.06396729677259572e+01, -7.67996902764133779e+02},
    {-1.9, 1.0, -2.88852086204819392e-01, 8.99209999492719847e-01, -6.47204195206827593e-01},
    {-1.9, 5.0, 1.82422704496987365e+01, 1.79306763837052685e+01, 1.73052001691818198e+01},
    {-1.9, 10.0, 2.32860945562700272e+03, 2.25544217040471813e+03, 2.18713003358647438e+03},
    {-1.9, 20.0, 3.97074910615691468e+07, 3.88901779646485150e+07, 3.81213422704344764e+07},
    {-1.9, 30.0, 7.35279093843708008e+11, 7.24443696774312378e+11, 7.14080256760981812e+11},
    {-1.9, 50.0, 2.82754593542380487e+20, 2.80120908438791029e+20, 2.77560473006679884e+20},
    {-1.5, 0.001, 8.41044258111140364e-06, 1.26156655537555742e-02, 6.30783866418766603e+00},
    {-1.5, 0.05, 2.97428364501308709e-03, 8.92582500625904440e-02, 8.94664562904982308e-01},
    {-1.5, 0.1, 8.41885518609277080e-03, 1.26451156808740445e-01, 6.38149703969561610e-01},
    {-1.5, 1.0, 2.93525326347479798e-01, 4.97386898724267945e-01, 4.56570411905041385e-01},
    {-1.5, 5.0, 2.11844422647941393e+01, 2.01222148181208240e+01, 1.90665991050014441e+01},
    {-1.5, 10.0, 2.50090615494211806e+03, 2.40364868063325321e+03, 2.31681167536499015e+03},
    {-1.5, 20.0, 4.11157589588074833e+07, 4.01960643505183682e+07, 3.93372318854248524e+07},
    {-1.5, 30.0, 7.52420533212431519e+11, 7.40745042179824829e+11, 7.29610083139468384e+11},
    {-1.5, 50.0, 2.86665371593146434e+20, 2.83915724151334601e+20, 2.81245055944553562e+20},
    {-1.4, 0.001, 2.48043075439671101e+00, -9.92164033668446450e+02, 1.38904287608321197e+06},
    {-1.4, 0.05, 5.20888287719335263e-01, -4.08061259323331083e+00, 1.17026523582538772e+02},
    {-1.4, 0.1, 3.99679103681555681e-01, -1.46743766241036178e+00, 2.26493572794571563e+01},
    {-1.4, 1.0, 4.41878856628685979e-01, 4.44737298392200164e-01, 5.81516306388763504e-01},
    {-1.4, 5.0, 2.18797853697825531e+01, 2.06209411400717570e+01, 1.94650530075760422e+01},
    {-1.4, 10.0, 2.53933431217689758e+03, 2.43651466718476195e+03, 2.34545267647809351e+03},
    {-1.4, 20.0, 4.14225733097665235e+07, 4.04802295986011028e+07, 3.96015324388418421e+07},
    {-1.4, 30.0, 7.56127689799053589e+11, 7.44268719089187866e+11, 7.32965410576087402e+11},
    {-1.4, 50.0, 2.87506307666647351e+20, 2.84731581518222426e+20, 2.82037080981493547e+20},
    {-1.0, 0.001, 6.36619984574186226e-01, 4.24413238166814182e-04, 4.24413351343672307e-01},
    {-1.0, 0.05, 6.37150377270283119e-01, 2.12277333898664676e-02, 4.24837670553648239e-01},
    {-1.0, 0.1, 6.38743253390345767e-01, 4.24979308393644006e-02, 4.26112047273141226e-01},
    {-1.0, 1.0, 8.63384153423390033e-01, 4.83478804882082225e-01, 6.06669729597116403e-01},
    {-1.0, 5.0, 2.43648355527758653e+01, 2.23602739704764915e+01, 2.08419093898968981e+01},
    {-1.0, 10.0, 2.67099490498085061e+03, 2.54861642085374660e+03, 2.44283684574756080e+03},
    {-1.0, 20.0, 4.24549733867317513e+07, 4.14355338901354447e+07, 4.04893341241002604e+07},
    {-1.0, 30.0, 7.68532038938957764e+11, 7.56054563192678833e+11, 7.44184144653577637e+11},
    {-1.0, 50.0, 2.90307859010355692e+20, 2.87449221204726514e+20, 2.84674997729865302e+20},
    {-0.75, 0.001, 1.37693633833895934e-01, 3.44234696556379731e+01, -2.58174645480955187e+04},
    {-0.75, 0.05, 3.66351106990290110e-01, 1.83989447464853906e+00, -2.72320718253602827e+01},
    {-0.75, 0.1, 4.36393570536045661e-01, 1.11035829204738890e+00, -7.89132128024163926e+00},
    {-0.75, 1.0, 9.56468177064797587e-01, 6.24146848061123416e-01, 4.83180662034715103e-01},
    {-0.75, 5.0, 2.55861251552099453e+01, 2.32042566826816206e+01, 2.14978044231930561e+01},
    {-0.75, 10.0, 2.73333564208962116e+03, 2.60143497508742848e+03, 2.48856027288747055e+03},
    {-0.75, 20.0, 4.29341254551163986e+07, 4.18784480579078943e+07, 4.09005791640954316e+07},
    {-0.75, 30.0, 7.74253174325532715e+11, 7.61488081263683228e+11, 7.49354146517362427e+11},
    {-0.75, 50.0, 2.91593710295001268e+20, 2.88696373068038636e+20, 2.85885391418456867e+20},
    {-0.5, 0.001, 2.52313294254226800e-02, 1.26156731231539219e+01, -6.30781553546882606e+03},
    {-0.5, 0.05, 1.78486759412983059e-01, 1.78784187777484349e+00, -1.77296748547855820e+01},
    {-0.5, 0.1, 2.52733984600131967e-01, 1.27208877818675270e+00, -6.14980418226409409e+00},
    {-0.5, 1.0, 9.37674888245487614e-01, 7.62362770470223605e-01, 4.09730839836635941e-01},
    {-0.5, 5.0, 2.64775474975590654e+01, 2.38321970145500437e+01, 2.19758835696246457e+01},
    {-0.5, 10.0, 2.77878460387457108e+03, 2.63984538513584630e+03, 2.52174702687067293e+03},
    {-0.5, 20.0, 4.32797462724289298e+07, 4.21977526156182066e+07, 4.11969084830682874e+07},
    {-0.5, 30.0, 7.78366068840446411e+11, 7.65393301026438965e+11, 7.53069171603131836e+11},
    {-0.5, 50.0, 2.92515685299128992e+20, 2.89590528446137729e+20, 2.86753126298736165e+20},
    {-0.4, 0.001, 1.24021349808710046e-02, 7.44128474674511242e+00, -2.97650412731880351e+03},
    {-0.4, 0.05, 1.29730736746808628e-01, 1.55873418169380384e+00, -1.23676570191722579e+01},
    {-0.4, 0.1, 1.96858524136254653e-01, 1.18711320022657385e+00, -4.59332582695425096e+00},
    {-0.4, 1.0, 9.06863358316834622e-01, 8.04624199955419672e-01, 4.03841635047634262e-01},
    {-0.4, 5.0, 2.67308385236577841e+01, 2.40182524516751741e+01, 2.21147079198272429e+01},
    {-0.4, 10.0, 2.79201524033955548e+03, 2.65101492179047955e+03, 2.53138720309502287e+03},
    {-0.4, 20.0, 4.33798097279238179e+07, 4.22901695043250024e+07, 4.12826531789596751e+07},
    {-0.4, 30.0, 7.79554677946475708e+11, 7.66521752171673340e+11, 7.54142540372389526e+11},
    {-0.4, 50.0, 2.92781758132888535e+20, 2.89848561731710452e+20, 2.87003524930774827e+20},
    {-0.25, 0.001, 4.16256987401559999e-03, 3.12192851553028383e+00, -7.80479076331268402e+02},
    {-0.25, 0.05, 7.82949477986415454e-02, 1.17546803364353925e+00, -5.81992097386436757e+00},
    {-0.25, 0.1, 1.31807587018139549e-01, 9.92070210488475657e-01, -2.38349711580522872e+00},
    {-0.25, 1.0, 8.43401455406250444e-01, 8.48078006225900460e-01, 4.18146605785675751e-01},
    {-0.25, 5.0, 2.69930928546240096e+01, 2.42240967297843248e+01, 2.22652578113122495e+01},
    {-0.25, 10.0, 2.80641472669769973e+03, 2.66317039095012660e+03, 2.54187250965346811e+03},
    {-0.25, 20.0, 4.34884777537946701e+07, 4.23905194815765694e+07, 4.13757468631155938e+07},
    {-0.25, 30.0, 7.80844410621816406e+11, 7.67746137570350098e+11, 7.55307098009103149e+11},
    {-0.25, 50.0, 2.93070278722463662e+20, 2.90128358901388935e+20, 2.87275038301403939e+20},
    {0.0, 0.001, 6.36619843103114502e-04, 6.36619984574186226e-01, 4.24413238166814182e-04},
    {0.0, 0.05, 3.18398314439011926e-02, 6.37150377270283119e-01, 2.12277333898664676e-02},
    {0.0, 0.1, 6.37327410670083527e-02, 6.38743253390345767e-01, 4.24979308393644006e-02},
    {0.0, 1.0, 7.10243185937890931e-01, 8.63384153423390033e-01, 4.83478804882082225e-01},
    {0.0, 5.0, 2.71059171265581469e+01, 2.43648355527758653e+01, 2.23602739704764915e+01},
    {0.0, 10.0, 2.81565224937459470e+03, 2.67099490498085061e+03, 2.54861642085374660e+03},
    {0.0, 20.0, 4.35582825276410431e+07, 4.24549733867317513e+07, 4.14355338901354447e+07},
    {0.0, 30.0, 7.81672297823956299e+11, 7.68532038938957764e+11, 7.56054563192678833e+11},
    {0.0, 50.0, 2.93255378384933618e+20, 2.90307859010355692e+20, 2.87449221204726514e+20},
    {0.5, 0.001, 1.26156636614060536e-05, 1.89234975947196529e-02, 9.46175615649712043e+00},
    {0.5, 0.05, 4.46123959913182367e-03, 1.33874363421664810e-01, 1.34134616338456003e+00},
    {0.5, 0.1, 1.26261791672524562e-02, 1.89603088763869693e-01, 9.55382292730026950e-01},
    {0.5, 1.0, 4.33315653790102118e-01, 7.21017061350436639e-01, 6.18512066690056317e-01},
    {0.5, 5.0, 2.61231269410753981e+01, 2.38652348034515249e+01, 2.19681360730264004e+01},
    {0.5, 10.0, 2.77853230207737306e+03, 2.63985798877070238e+03, 2.52174514720769821e+03},
    {0.5, 20.0, 4.32797460940165147e+07, 4.21977526200785115e+07, 4.11969084827337638e+07},
    {0.5, 30.0, 7.78366068840300781e+11, 7.65393301026441406e+11, 7.53069171603131714e+11},
    {0.5, 50.0, 2.92515685299128992e+20, 2.89590528446137729e+20, 2.86753126298736165e+20},
    {1.0, 0.001, 2.12206604936300249e-07, 4.24413238166814182e-04, 4.24413351343672307e-01},
    {1.0, 0.05, 5.30604902701736336e-04, 2.12277333898664676e-02, 4.24837670553648239e-01},
    {1.0, 0.1, 2.12348102276439495e-03, 4.24979308393644006e-02, 4.26112047273141226e-01},
    {1.0, 1.0, 2.26764381055808650e-01, 4.83478804882082225e-01, 6.06669729597116403e-01},
    {1.0, 5.0, 2.37282157804082807e+01, 2.23602739704764915e+01, 2.08419093898968981e+01},
    {1.0, 10.0, 2.67035828520848281e+03, 2.54861642085374660e+03, 2.44283684574756080e+03},
    {1.0, 20.0, 4.24549727501119822e+07, 4.14355338901354447e+07, 4.04893341241002604e+07},
    {1.0, 30.0, 7.68532038938321045e+11, 7.56054563192678833e+11, 7.44184144653577637e+11},
    {1.0, 50.0, 2.90307859010355692e+20, 2.87449221204726514e+20, 2.84674997729865302e+20},
    {1.5, 0.001, 3.15391582774274078e-09, 7.88478991979194176e-06, 1.18271864566458530e-02},
    {1.5, 0.05, 5.57616227080201684e-05, 2.78839091789121916e-03, 8.36796095097403492e-02},
    {1.5, 0.1, 3.15566826599413843e-04, 7.89267676826124927e-03, 1.18547961229863039e-01},
    {1.5, 1.0, 1.05416954053952877e-01, 2.75190222709172760e-01, 4.66357158367606772e-01},
    {1.5, 5.0, 2.03608600512676006e+01, 2.00148689256951151e+01, 1.90824257288190466e+01},
    {1.5, 10.0, 2.49966980740582358e+03, 2.40358183096649918e+03, 2.31681576123681498e+03},
    {1.5, 20.0, 4.11157571836039871e+07, 4.01960643052462190e+07, 3.93372318866235614e+07},
    {1.5, 30.0, 7.52420533210251343e+11, 7.40745042179788208e+11, 7.29610083139469116e+11},
    {1.5, 50.0, 2.86665371593146434e+20, 2.83915724151334601e+20, 2.81245055944553562e+20},
    {2.5, 0.001, 5.25652630656392484e-13, 1.83978425110175964e-09, 4.59946086867852474e-06},
    {2.5, 0.05, 4.64664055132151141e-07, 3.25284199514126111e-05, 1.62663397545273979e-03},
    {2.5, 0.1, 5.25871674484113665e-06, 1.84098907978385456e-04, 4.60488325501189674e-03},
    {2.5, 1.0, 1.73292215278852864e-02, 6.20939002342396629e-02, 1.63278525943286845e-01},
    {2.5, 5.0, 1.27915333377193541e+01, 1.39650933824079235e+01, 1.43114755682630896e+01},
    {2.5, 10.0, 2.02547744420310073e+03, 1.99330044635504851e+03, 1.95589365548281489e+03},
    {2.5, 20.0, 3.71123735958553404e+07, 3.64767104841220677e+07, 3.58684278297050521e+07},
    {2.5, 30.0, 7.03124015502887329e+11, 6.93826865251677368e+11, 6.84879259007434204e+11},
    {2.5, 50.0, 2.75315763003540210e+20, 2.72899583442969428e+20, 2.70546060742189679e+20},
    {5.0, 0.001, 6.12428849149750407e-23, 3.67457312630510990e-19, 1.83728658827784145e-15},
    {5.0, 0.05, 9.56981395333808156e-13, 1.14840221244797853e-10, 1.14844147397817795e-08},
    {5.0, 0.1, 6.12585887420161415e-11, 3.67582947435091174e-09, 1.83816607379382392e-07},
    {5.0, 1.0, 6.28343284054891382e-05, 3.80231446029299783e-04, 1.92713280930450928e-03},
    {5.0, 5.0, 1.82477694177275662e+00, 2.66177479156226404e+00, 3.53824374822749244e+00},
    {5.0, 10.0, 7.70956397430570746e+02, 8.35318836564983144e+02, 8.86900330299626148e+02},
    {5.0, 20.0, 2.30182867313828655e+07, 2.31804409497231729e+07, 2.32980153920828253e+07},
    {5.0, 30.0, 5.12151464936593750e+11, 5.10850158550010254e+11, 5.09349556445506226e+11},
    {5.0, 50.0, 2.27854830791128187e+20, 2.26724411278799307e+20, 2.25598890873463472e+20},
    {6.0, 0.001, 4.71099113119982006e-27, 3.29769381277761225e-23, 1.97861630651053197e-19},
    {6.0, 0.05, 3.68066621557239649e-15, 5.15301449465120665e-13, 6.18376462263571358e-11},
    {6.0, 0.1, 4.71203803657833588e-13, 3.29863605225461290e-11, 1.97937012519284392e-09},
    {6.0, 1.0, 4.81692065720937327e-06, 3.39328044622329053e-05, 2.05536143199158564e-04},
    {6.0, 5.0, 6.45613839337493056e-01, 1.05004033456776491e+00, 1.55667371152194445e+00},
    {6.0, 10.0, 4.43716349515233276e+02, 5.04726587721430803e+02, 5.59105864903038650e+02},
    {6.0, 20.0, 1.74256732896507531e+07, 1.77905847444876395e+07, 1.81046506257216446e+07},
    {6.0, 30.0, 4.25491579572375916e+11, 4.27053149022118591e+11, 4.28276139276069092e+11},
    {6.0, 50.0, 2.03938928199686455e+20, 2.03382159407165800e+20, 2.02808005577618653e+20},
};

inline constexpr PairRef kNormStruve[] = {
    {-1.4, 0.05, 2.83270453897538736e-02},
    {-1.4, 1.0, 1.59294911007906514e+00},
    {-1.4, 3.0, 5.53477098662575955e+01},
    {-1.4, 30.0, 3.18759824533326312e+14},
    {-0.5, 0.05, 2.82212345963762275e-02},
    {-0.5, 1.0, 6.63036272026722440e-01},
    {-0.5, 3.0, 5.65198068332890191e+00},
    {-0.5, 30.0, 3.01459882187198486e+12},
    {0.0, 0.05, 2.82173159274626030e-02},
    {0.0, 1.0, 6.29436634997508571e-01},
    {0.0, 3.0, 4.11979046344819544e+00},
    {0.0, 30.0, 6.92739037212117310e+11},
    {1.0, 0.05, 2.82141810930911750e-02},
    {1.0, 1.0, 6.02894100675860800e-01},
    {1.0, 3.0, 3.01016984939360110e+00},
    {1.0, 30.0, 6.81093785980247574e+10},
    {2.0, 0.05, 2.82128376352951439e-02},
    {2.0, 1.0, 5.91660600465239273e-01},
    {2.0, 3.0, 2.58136830050784161e+00},
    {2.0, 30.0, 1.07888797467965374e+10},
    {6.0, 0.05, 2.82110464167702364e-02},
    {6.0, 1.0, 5.76875745311318466e-01},
    {6.0, 3.0, 2.06947029657858250e+00},
    {6.0, 30.0, 6.98998474934879094e+07},
};

inline constexpr PairRef kBesselI[] = {
    {-0.9, 0.001, 9.83076711100870142e+01},
    {-0.9, 0.1, 1.59706366507422648e+00},
    {-0.9, 1.0, 7.44502437358848024e-01},
    {-0.9, 5.0, 2.48598394550761483e+01},
    {-0.9, 20.0, 4.26623896154836938e+07},
    {-0.9, 50.0, 2.90865582993401479e+20},
    {-0.5, 0.001, 2.52313378358652614e+01},
    {-0.5, 0.1, 2.53575870118741253e+00},
    {-0.5, 1.0, 1.23120021459296747e+00},
    {-0.5, 5.0, 2.64799517643059517e+01},
    {-0.5, 20.0, 4.32797462724289298e+07},
    {-0.5, 50.0, 2.92515685299128992e+20},
    {0.0, 0.001, 1.00000025000001558e+00},
    {0.0, 0.1, 1.00250156293409565e+00},
    {0.0, 1.0, 1.26606587775200841e+00},
    {0.0, 5.0, 2.72398718236044459e+01},
    {0.0, 20.0, 4.35582825595535338e+07},
    {0.0, 50.0, 2.93255378384933618e+20},
    {0.5, 0.001, 2.52313294254226800e-02},
    {0.5, 0.1, 2.52733984600131967e-01},
    {0.5, 1.0, 9.37674888245487614e-01},
    {0.5, 5.0, 2.64775474975590654e+01},
    {0.5, 20.0, 4.32797462724289298e+07},
    {0.5, 50.0, 2.92515685299128992e+20},
    {1.0, 0.001, 5.00000062500002580e-04},
    {1.0, 0.1, 5.00625260470926939e-02},
    {1.0, 1.0, 5.65159103992485035e-01},
    {1.0, 5.0, 2.43356421424505278e+01},
    {1.0, 20.0, 4.24549733851277679e+07},
    {1.0, 50.0, 2.90307859010355692e+20},
    {2.0, 0.001, 1.25000010416666999e-07},
    {2.0, 0.1, 1.25104199224175929e-03},
    {2.0, 1.0, 1.35747669767038281e-01},
    {2.0, 5.0, 1.75056149666242362e+01},
    {2.0, 20.0, 3.93127852210407555e+07},
    {2.0, 50.0, 2.81643064024519410e+20},
    {5.0, 0.001, 2.60416677517361328e-19},
    {5.0, 0.1, 2.60525192989369777e-09},
    {5.0, 1.0, 2.71463155956971891e-04},
    {5.0, 5.0, 2.15797454732254668e+00},
    {5.0, 20.0, 2.30183922134136707e+07},
    {5.0, 50.0, 2.27854830791128187e+20},
};

}  // namespace modstruve::reference
