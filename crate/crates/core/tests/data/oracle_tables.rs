// Generated by tests/oracles/gen_oracles.py (mpmath, 60 digits). Do not edit.
#![allow(dead_code)]

pub const ERFC: &[(f64, f64)] = &[
    (1.0e-4, 9.9988716208366657513e-1),
    (1.2897622462083087319e-4, 9.9985446591589420314e-1),
    (1.6634866517443019918e-4, 9.9981229563347440362e-1),
    (2.1455022804912695496e-4, 9.9975790599608844814e-1),
    (2.7671878405314686569e-4, 9.9968775629690026922e-1),
    (3.5690144048841862386e-4, 9.9959727986694580366e-1),
    (4.6031800355932382777e-4, 9.9948058679123127749e-1),
    (5.9370078224079775392e-4, 9.993300804845423904e-1),
    (7.6573285447852128099e-4, 9.9913596316832093851e-1),
    (9.87613326387717606e-4, 9.9888559805968002919e-1),
    (1.2737863822270822059e-3, 9.9856268676032716165e-1),
    (1.6428815855307568539e-3, 9.9814620831271400409e-1),
    (2.1189266440084166417e-3, 9.9760905089663220372e-1),
    (2.7329115879269288128e-3, 9.9691624717598818727e-1),
    (3.5248061883333515367e-3, 9.9602269860071591747e-1),
    (4.5461619469137703819e-3, 9.9487024090880104938e-1),
    (5.8634680442782424862e-3, 9.9338386063351809227e-1),
    (7.5624797153589450706e-3, 9.9146681811193465361e-1),
    (9.7538008245861242497e-3, 9.8899436336370685015e-1),
    (1.2580084060586653514e-2, 9.8580564402223946943e-1),
    (1.6225317475471583671e-2, 9.8169329627519467852e-1),
    (2.0926801912607154972e-2, 9.76390079243882632e-1),
    (2.6990599040760535481e-2, 9.6955176428426138685e-1),
    (3.4811455645319131249e-2, 9.6073534010886517121e-1),
    (4.4898501226887712286e-2, 9.4937148912212262139e-1),
    (5.7908391793777201242e-2, 9.3473034326797755658e-1),
    (7.4688057474252875557e-2, 9.1587999661928921968e-1),
    (9.6329836772927650489e-2, 8.9163869949067786919e-1),
    (1.2424258665313090463e-1, 8.6052527403369314645e-1),
    (1.6024339763647255416e-1, 8.2072049408483263074e-1),
    (2.0667588447566803192e-1, 7.7006961432318679136e-1),
    (2.665627529984265246e-1, 7.0619094975508864663e-1),
    (3.4380257506272117788e-1, 6.2681809452672524285e-1),
    (4.4342358146509593568e-1, 5.3059654312272313592e-1),
    (5.7191099445215510855e-1, 4.1862773118664507142e-1),
    (7.3762920883583916634e-1, 2.9687177343598225172e-1),
    (9.5136630525696957357e-1, 1.7848475638504177666e-1),
    (1.227036342835128593, 8.2689197601981830187e-2),
    (1.5825851497142638463, 2.5213662187180731436e-2),
    (2.0411585775113815022, 3.8938671986380441452e-3),
    (2.6326092717984356517, 1.9681357145170587092e-4),
    (3.3954400477835703244, 1.571849512623037356e-6),
    (4.379310382894984794, 5.8924863782634135415e-10),
    (5.6482691962860041624, 1.373024678600278623e-15),
    (7.2849243657910353804, 6.8697179493728722271e-25),
    (9.3958204134802847153, 2.7284861072130347169e-40),
    (1.2118374441460212126e+1, 7.7303414032820265948e-66),
    (1.5629821840011081924e+1, 2.89874312014972044e-108),
    (2.0158754124208374054e+1, 9.1169342717513183603e-179),
    (2.6e+1, 5.6631924088561428465e-296),
];

pub const ERFC_NEG: &[(f64, f64)] = &[
    (-1.0e-4, 1.0001128379163334249),
    (-3.395515321684606837e-4, 1.000383142860329403),
    (-1.152952429979491905e-3, 1.0013009669261828369),
    (-3.9148676411688635954e-3, 1.0044174325207517165),
    (-1.329299305795615184e-2, 1.0149986529907582068),
    (-4.513656159933722845e-2, 1.0508965894084346908),
    (-1.5326188647871062132e-1, 1.1715929533940290864),
    (-5.2040308376874879036e-1, 1.5382456277759237802),
    (-1.7670366443887044478, 1.987544415682461275),
    (-6.0, 1.9999999999999999785),
];

pub const ERFI: &[(f64, f64)] = &[
    (1.0e-4, 1.1283791708567764755e-4),
    (1.2897622462083087319e-4, 1.4553408571975691217e-4),
    (1.6634866517443019918e-4, 1.8770436998835134625e-4),
    (2.1455022804912695496e-4, 2.4209401134090054646e-4),
    (2.7671878405314686569e-4, 3.1224371903941532278e-4),
    (3.5690144048841862386e-4, 4.0272016725282587904e-4),
    (4.6031800355932382777e-4, 5.1941328214196018015e-4),
    (5.9370078224079775392e-4, 6.6991967288005834981e-4),
    (7.6573285447852128099e-4, 8.6403716942928427821e-4),
    (9.87613326387717606e-4, 1.1144026649638440369e-3),
    (1.2737863822270822059e-3, 1.437314794397920907e-3),
    (1.6428815855307568539e-3, 1.8537950229522060762e-3),
    (2.1189266440084166417e-3, 2.3909562600472571453e-3),
    (2.7329115879269288128e-3, 3.0837681786839168079e-3),
    (3.5248061883333515367e-3, 3.9773343427680982527e-3),
    (4.5461619469137703819e-3, 5.1298297715190350562e-3),
    (5.8634680442782424862e-3, 6.6162910112698429196e-3),
    (7.5624797153589450706e-3, 8.5335072423037344878e-3),
    (9.7538008245861242497e-3, 1.1006334684553867227e-2),
    (1.2580084060586653514e-2, 1.4195853641897503717e-2),
    (1.6225317475471583671e-2, 1.8309916966636765913e-2),
    (2.0926801912607154972e-2, 2.3616814773854813437e-2),
    (2.6990599040760535481e-2, 3.0463026846874119249e-2),
    (3.4811455645319131249e-2, 3.929639429884296495e-2),
    (4.4898501226887712286e-2, 5.0696597134606487635e-2),
    (5.7908391793777201242e-2, 6.5415736026037422337e-2),
    (7.4688057474252875557e-2, 8.4433417284028058737e-2),
    (9.6329836772927650489e-2, 1.0903373339486315032e-1),
    (1.2424258665313090463e-1, 1.4091744793685535173e-1),
    (1.6024339763647255416e-1, 1.8237496229386030123e-1),
    (2.0667588447566803192e-1, 2.3657224716433662006e-1),
    (2.665627529984265246e-1, 3.0806246145869027581e-1),
    (3.4380257506272117788e-1, 4.0378212598741353684e-1),
    (4.4342358146509593568e-1, 5.3517216111867988604e-1),
    (5.7191099445215510855e-1, 7.2316908144396355259e-1),
    (7.3762920883583916634e-1, 1.0114832457662436887),
    (9.5136630525696957357e-1, 1.5081696712048833132),
    (1.227036342835128593, 2.5489770626997219065),
    (1.5825851497142638463, 5.59045784393603597),
    (2.0411585775113815022, 2.1322769171168538921e+1),
    (2.6326092717984356517, 2.4112307761318654755e+2),
    (3.3954400477835703244, 1.774553479526064962e+4),
    (4.379310382894984794, 2.8265354099119258643e+7),
    (5.6482691962860041624, 7.2757728981255959207e+12),
    (7.2849243657910353804, 8.734830582242738124e+21),
    (9.3958204134802847153, 1.3216872500935249787e+37),
    (1.2118374441460212126e+1, 2.8040638598950778584e+62),
    (1.5629821840011081924e+1, 4.4951215428555248535e+104),
    (2.0158754124208374054e+1, 8.5916626339446985524e+174),
    (2.6e+1, 8.3146371647309876553e+291),
];

pub const ERFCX: &[(f64, f64)] = &[
    (1.0e-4, 9.9988717208253824596e-1),
    (1.5998587196060581479e-4, 9.9981950086744918559e-1),
    (2.5595479226995357856e-4, 9.9971125144492813408e-1),
    (4.0949150623804252173e-4, 9.9953810594691281705e-1),
    (6.5512855685955088172e-4, 9.9926119556667233347e-1),
    (1.0481131341546857363e-3, 9.9881842865026528419e-1),
    (1.6768329368110081748e-3, 9.9811070487327856268e-1),
    (2.6826957952797257477e-3, 9.969800843118099647e-1),
    (4.2919342601287779264e-3, 9.9517543218981468393e-1),
    (6.8664884500430011569e-3, 9.9229890371378368994e-1),
    (1.0985411419875582598e-2, 9.8772397983973924329e-1),
    (1.7575106248547918814e-2, 9.8047346407819619518e-1),
    (2.8117686979742305346e-2, 9.6904677687385139886e-1),
    (4.4984326689694456874e-2, 9.5119772851107942571e-1),
    (7.1968567300115201993e-2, 9.2370408823636256172e-1),
    (1.1513953993264473222e-1, 8.8226995634218079438e-1),
    (1.8420699693267160389e-1, 8.2189270670920085668e-1),
    (2.9470517025518107283e-1, 7.3825502701537898278e-1),
    (4.7148663634573936394e-1, 6.3060620944472002632e-1),
    (7.5431200633546173748e-1, 5.0535523362551236271e-1),
    (1.2067926406393286371, 3.7704906121966591092e-1),
    (1.930697728883250167, 2.6300295862090404514e-1),
    (3.0888435964774810024, 1.742928355315309404e-1),
    (4.9417133613238344981, 1.1196193260363618224e-1),
    (7.9060432109076996514, 7.0804149487315220287e-2),
    (1.2648552168552961097e+1, 4.446695613726595387e-2),
    (2.0235896477251570525e+1, 2.7846712988812871635e-2),
    (3.23745754281764402e+1, 1.7418632213538954426e-2),
    (5.1794746792312111348e+1, 1.0890766414457008836e-2),
    (8.286427728546844182e+1, 6.8081026971800988159e-3),
    (1.3257113655901090906e+2, 4.2556287042965120709e-3),
    (2.1209508879201907836e+2, 2.6600489243425636843e-3),
    (3.3932217718953285682e+2, 1.662688652499091654e-3),
    (5.4286754393238602677e+2, 1.0392749256210988493e-3),
    (8.6851137375135262962e+2, 6.4960486025108851742e-4),
    (1.3894954943731376371e+3, 4.0603905498241092953e-4),
    (2.222996482526194754e+3, 2.537968597333196351e-4),
    (3.556480306223128954e+3, 1.5863705480331325033e-4),
    (5.6898660290182966838e+3, 9.9156917220357199415e-5),
    (9.1029817799152186274e+3, 6.1978546566827445421e-5),
    (1.456348477501243788e+4, 3.874001249932540323e-5),
    (2.3299518105153720684e+4, 2.4214646006061491116e-5),
    (3.7275937203149401662e+4, 1.5135490229795455526e-5),
    (5.963623316594642997e+4, 9.4605167616555991083e-6),
    (9.5409547634999394894e+4, 5.9133451263718549721e-6),
    (1.5264179671752334521e+5, 3.6961670765690073425e-6),
    (2.4420530945486510853e+5, 2.3103084236884765543e-6),
    (3.906939937054616984e+5, 1.4440702765736455372e-6),
    (6.2505519252739729432e+5, 9.0262362474863338841e-7),
    (1.0e+6, 5.6418958354747419216e-7),
];

pub const DAWSON: &[(f64, f64)] = &[
    (1.0e-4, 9.9999999333333336e-5),
    (1.5998587196060581479e-4, 1.5998586923066246782e-4),
    (2.5595479226995357856e-4, 2.559547810910676261e-4),
    (4.0949150623804252173e-4, 4.0949146046145592516e-4),
    (6.5512855685955088172e-4, 6.5512836940833653124e-4),
    (1.0481131341546857363e-3, 1.0481123665580901467e-3),
    (1.6768329368110081748e-3, 1.6768297935703010974e-3),
    (2.6826957952797257477e-3, 2.6826829239985863297e-3),
    (4.2919342601287779264e-3, 4.2918815535623960918e-3),
    (6.8664884500430011569e-3, 6.8662726236105397271e-3),
    (1.0985411419875582598e-2, 1.0984527654959950747e-2),
    (1.7575106248547918814e-2, 1.7571487578704359434e-2),
    (2.8117686979742305346e-2, 2.8102871688828653062e-2),
    (4.4984326689694456874e-2, 4.4923689237972923459e-2),
    (7.1968567300115201993e-2, 7.1720575143793269187e-2),
    (1.1513953993264473222e-1, 1.1412730381407219117e-1),
    (1.8420699693267160389e-1, 1.8009597678354216372e-1),
    (2.9470517025518107283e-1, 2.7821988590546820739e-1),
    (4.7148663634573936394e-1, 4.0744973835009446287e-1),
    (7.5431200633546173748e-1, 5.2392920907175904192e-1),
    (1.2067926406393286371, 5.0578513484168419185e-1),
    (1.930697728883250167, 3.1609960837258170153e-1),
    (3.0888435964774810024, 1.7231682037554435111e-1),
    (4.9417133613238344981, 1.0339368095325309721e-1),
    (7.9060432109076996514, 6.3761313636220866768e-2),
    (1.2648552168552961097e+1, 3.9654935712727430727e-2),
    (2.0235896477251570525e+1, 2.4738847817610389614e-2),
    (3.23745754281764402e+1, 1.5451596181011022678e-2),
    (5.1794746792312111348e+1, 9.6552888655484021176e-3),
    (8.286427728546844182e+1, 6.0344026768708680003e-3),
    (1.3257113655901090906e+2, 3.7716673391928139229e-3),
    (2.1209508879201907836e+2, 2.3574593854308311772e-3),
    (3.3932217718953285682e+2, 1.4735322502290762912e-3),
    (5.4286754393238602677e+2, 9.2103654730929297122e-4),
    (8.6851137375135262962e+2, 5.7569808126847430352e-4),
    (1.3894954943731376371e+3, 3.598429296904914191e-4),
    (2.222996482526194754e+3, 2.2492165620593364192e-4),
    (3.556480306223128954e+3, 1.4058844045620339211e-4),
    (5.6898660290182966838e+3, 8.7875532599908516782e-5),
    (9.1029817799152186274e+3, 5.4927057430805760388e-5),
    (1.456348477501243788e+4, 3.4332442331151444927e-5),
    (2.3299518105153720684e+4, 2.1459671320408997714e-5),
    (3.7275937203149401662e+4, 1.3413478981225373066e-5),
    (5.963623316594642997e+4, 8.3841646852337574656e-6),
    (9.5409547634999394894e+4, 5.2405656710612775316e-6),
    (1.5264179671752334521e+5, 3.2756427843680486261e-6),
    (2.4420530945486510853e+5, 2.0474575312073788298e-6),
    (3.906939937054616984e+5, 1.2797739613539599751e-6),
    (6.2505519252739729432e+5, 7.9992935980405280271e-7),
    (1.0e+6, 5.0000000000025e-7),
];

pub const EI: &[(f64, f64)] = &[
    (1.0e-4, -8.6330247045745943189),
    (1.3794179668944000052e-4, -8.3113251134387973978),
    (1.9027939273910800287e-4, -7.9896111244659013973),
    (2.6247481307408141982e-4, -7.6678772737912170881),
    (3.6206247301163707362e-4, -7.346116023498563079),
    (4.9943548041047098416e-4, -7.0243169738182060532),
    (6.8893027498273982634e-4, -6.7024657756330737164),
    (9.5032279924869089787e-4, -6.3805426288751297063),
    (1.3108923436330242431e-3, -6.0585202083398934228),
    (1.8082684514717014707e-3, -5.7363607970975915513),
    (2.4943579909283794617e-3, -5.4140123219453556904),
    (3.4407622285532254487e-3, -5.0914028649680650518),
    (4.7462492378779351263e-3, -4.7684330551867363485),
    (6.5470614740876767711e-3, -4.4449655019207550274),
    (9.0311342277186766136e-3, -4.1208100823609554988),
    (1.2457708815150124215e-2, -3.7957033857410597457),
    (1.7184387365956829158e-2, -3.469279857770563578),
    (2.3704452682673983069e-2, -3.1410310354513641472),
    (3.2698347925878651769e-2, -2.8102474619634314658),
    (4.510468861672125114e-2, -2.4759349743240170476),
    (6.2218217869082615569e-2, -2.1366922324981283648),
    (8.5824927596762770239e-2, -1.7905280170994560617),
    (1.1838844713438558439e-1, -1.4345817983567072195),
    (1.6330715104989931921e-1, -1.0646828001101440754),
    (2.2526881828056880016e-1, -6.7462694280364530746e-1),
    (3.1073985531728626388e-1, -2.5493475929220497722e-1),
    (4.2864013945483103096e-1, 2.0940390307190671139e-1),
    (5.9127390969611511255e-1, 7.4330315940764290887e-1),
    (8.1561385439071817456e-1, 1.3907511950970189653),
    (1.1250724047945496692, 2.2359364910981470848),
    (1.5519450892306911173, 3.4578689515645567509),
    (2.1407809397183481416, 5.493534193070231205),
    (2.95303169143256689, 9.6242309419870720944),
    (4.0734649719706426056, 2.0661835508548697949e+1),
    (5.6190107698512979268, 6.4027031500148447563e+1),
    (7.7509644121060147703, 3.5698569766862180388e+2),
    (1.0691819570818127281e+1, 4.6082596515416613065e+3),
    (1.474848801477969757e+1, 1.8609887933843192781e+5),
    (2.0344329352113836116e+1, 3.5497153916059830387e+7),
    (2.8063333432722933894e+1, 5.7018378991977027659e+10),
    (3.8711066348046312881e+1, 1.7213032266942661396e+15),
    (5.339874043813627093e+1, 2.9622535018603538062e+21),
    (7.3659181969895717402e+1, 1.3445298125186690377e+30),
    (1.0160679903601819647e+2, 1.332565642796035504e+42),
    (1.4015824414891210289e+2, 5.3267933153737084314e+58),
    (1.9333680018738126838e+2, 4.7979414974374611206e+81),
    (2.6669225584034632318e+2, 2.503815829815056432e+113),
    (3.6788008933777170086e+2, 1.5987181396606925547e+157),
    (5.0746040489523928039e+2, 4.8162589872138134812e+217),
    (7.0e+2, 1.4509787360525608526e+301),
];

pub const EI_SCALED: &[(f64, f64)] = &[
    (1.0e-3, -6.3232129883760356426),
    (1.5264179671752334521e-3, -5.8970805376969272562),
    (2.3299518105153720684e-3, -5.4696019523610018801),
    (3.556480306223128954e-3, -5.0402511237413274785),
    (5.4286754393238602677e-3, -4.6083232725065246678),
    (8.286427728546844182e-3, -4.1728949707071328209),
    (1.2648552168552961097e-2, -3.7327938987727886513),
    (1.930697728883250167e-2, -3.2866016372847129746),
    (2.9470517025518107283e-2, -2.8327357073728003238),
    (4.4984326689694456874e-2, -2.3696969284485018083),
    (6.8664884500430011569e-2, -1.8966325113818146118),
    (1.0481131341546857363e-1, -1.4144560951720354708),
    (1.5998587196060581479e-1, -9.2785697445909831734e-1),
    (2.4420530945486510853e-1, -4.4850810245876025795e-1),
    (3.7275937203149401662e-1, 6.7607874760838831716e-4),
    (5.6898660290182966838e-1, 3.8193196716194755959e-1),
    (8.6851137375135262962e-1, 6.4471496948805632246e-1),
    (1.3257113655901090906, 7.4217597337774658766e-1),
    (2.0235896477251570525, 6.6643967009557506087e-1),
    (3.0888435964774810024, 4.8045139033807225898e-1),
    (4.7148663634573936394, 2.922531881589432465e-1),
    (7.1968567300115201993, 1.6858842633084708227e-1),
    (1.0985411419875582598e+1, 1.0155613873589040267e-1),
    (1.6768329368110081748e+1, 6.3720016943214146969e-2),
    (2.5595479226995357856e+1, 4.0731822197149321555e-2),
    (3.906939937054616984e+1, 2.6287023354131335489e-2),
    (5.963623316594642997e+1, 1.7059445122780690807e-2),
    (9.1029817799152186274e+1, 1.1108833553215925067e-2),
    (1.3894954943731376371e+2, 7.2494135725225742096e-3),
    (2.1209508879201907836e+2, 4.7373089732131676458e-3),
    (3.23745754281764402e+2, 3.0984440453083793792e-3),
    (4.9417133613238344981e+2, 2.0277012370756852756e-3),
    (7.5431200633546173748e+2, 1.327473554750581125e-3),
    (1.1513953993264473222e+3, 8.6926699944063331318e-4),
    (1.7575106248547918814e+3, 5.6931071770040853404e-4),
    (2.6826957952797257477e+3, 3.7289842528643982595e-4),
    (4.0949150623804252173e+3, 2.4426497483636035658e-4),
    (6.2505519252739729432e+3, 1.6001147563359622373e-4),
    (9.5409547634999394894e+3, 1.0482230113040362718e-4),
    (1.456348477501243788e+4, 6.8669600014418393962e-5),
    (2.222996482526194754e+4, 4.4986350461426391542e-5),
    (3.3932217718953285682e+4, 2.9471385588087343495e-5),
    (5.1794746792312111348e+4, 1.9307350062599080386e-5),
    (7.9060432109076996514e+4, 1.2648712158472254579e-5),
    (1.2067926406393286371e+5, 8.2864963945693461079e-6),
    (1.8420699693267160389e+5, 5.4287049101608627409e-6),
    (2.8117686979742305346e+5, 3.5564929548652671202e-6),
    (4.2919342601287779264e+5, 2.3299572392161086735e-6),
    (6.5512855685955088172e+5, 1.5264202971341569607e-6),
    (1.0e+6, 1.000001000002000006e-6),
];

pub const SCALED_ERFC_COMBO: &[(f64, f64)] = &[
    (1.0e-6, 1.7704556220269192934e-3),
    (1.930697728883250167e-6, 2.4589599943487196269e-3),
    (3.7275937203149401662e-6, 3.4146301746465869267e-3),
    (7.1968567300115201993e-6, 4.7405949314810875958e-3),
    (1.3894954943731376371e-5, 6.5792894813043938715e-3),
    (2.6826957952797257477e-5, 9.126971250341688784e-3),
    (5.1794746792312111348e-5, 1.265316407083281673e-2),
    (1.0e-4, 1.7526297717665030593e-2),
    (1.930697728883250167e-4, 2.4246732560852212204e-2),
    (3.7275937203149401662e-4, 3.3487780681379002578e-2),
    (7.1968567300115201993e-4, 4.6143715833326528937e-2),
    (1.3894954943731376371e-3, 6.3380179366552280315e-2),
    (2.6826957952797257477e-3, 8.66754130132062979e-2),
    (5.1794746792312111348e-3, 1.1782858418193953452e-1),
    (1.0e-2, 1.5889286263174075608e-1),
    (1.930697728883250167e-2, 2.1196799055274797243e-1),
    (3.7275937203149401662e-2, 2.7877163283931051362e-1),
    (7.1968567300115201993e-2, 3.5993160402637117411e-1),
    (1.3894954943731376371e-1, 4.5405548671163873481e-1),
    (2.6826957952797257477e-1, 5.5688492280534050504e-1),
    (5.1794746792312111348e-1, 6.6115920544347893714e-1),
    (1.0, 7.5787215614131210604e-1),
    (1.930697728883250167, 8.3894101506452416635e-1),
    (3.7275937203149401662, 9.0001522485743212069e-1),
    (7.1968567300115201993, 9.4152665612513180442e-1),
    (1.3894954943731376371e+1, 9.6733603889166148905e-1),
    (2.6826957952797257477e+1, 9.8231793546636541968e-1),
    (5.1794746792312111348e+1, 9.9061342689977622898e-1),
    (1.0e+2, 9.9507318782446974738e-1),
    (1.930697728883250167e+2, 9.9743012696433475468e-1),
    (3.7275937203149401662e+2, 9.9866401388018441045e-1),
    (7.1968567300115201993e+2, 9.9930669527036601338e-1),
    (1.3894954943731376371e+3, 9.9964054492693138376e-1),
    (2.6826957952797257477e+3, 9.9981372442915767068e-1),
    (5.1794746792312111348e+3, 9.9990349305702374414e-1),
    (1.0e+4, 9.9995000749812565595e-1),
    (1.930697728883250167e+4, 9.9997410463836520722e-1),
    (3.7275937203149401662e+4, 9.9998658706075165894e-1),
    (7.1968567300115201993e+4, 9.9999305266732543417e-1),
    (1.3894954943731376371e+5, 9.9999640161048035543e-1),
    (2.6826957952797257477e+5, 9.9999813621356096162e-1),
    (5.1794746792312111348e+5, 9.9999903465393124017e-1),
    (1.0e+6, 9.9999950000074999813e-1),
    (1.930697728883250167e+6, 9.9999974102646724036e-1),
    (3.7275937203149401662e+6, 9.999998658652642124e-1),
    (7.1968567300115201993e+6, 9.9999993052523976157e-1),
    (1.3894954943731376371e+7, 9.9999996401572023455e-1),
    (2.6826957952797257477e+7, 9.9999998136203244055e-1),
    (5.1794746792312111348e+7, 9.9999999034651163515e-1),
    (1.0e+8, 9.99999995000000075e-1),
];

pub const SCALED_ERFI_EI_COMBO: &[(f64, f64)] = &[
    (1.0e-8, 1.784381938138400062e+1),
    (2.1209508879201907836e-8, 1.7092116437261694777e+1),
    (4.4984326689694456874e-8, 1.6340487116203085157e+1),
    (9.5409547634999394894e-8, 1.5588964902401466886e+1),
    (2.0235896477251570525e-7, 1.4837598446494203228e+1),
    (4.2919342601287779264e-7, 1.4086458373833264578e+1),
    (9.1029817799152186274e-7, 1.3335647089792388458e+1),
    (1.930697728883250167e-6, 1.2585312845214147091e+1),
    (4.0949150623804252173e-6, 1.1835669804998298141e+1),
    (8.6851137375135262962e-6, 1.1087026476484860919e+1),
    (1.8420699693267160389e-5, 1.0339825592312262776e+1),
    (3.906939937054616984e-5, 9.5946993392577574134),
    (8.286427728546844182e-5, 8.8525445025902815138),
    (1.7575106248547918814e-4, 8.114622276953043633),
    (3.7275937203149401662e-4, 7.3826864816342573349),
    (7.9060432109076996514e-4, 6.65914056808452173),
    (1.6768329368110081748e-3, 5.9472165031936251731),
    (3.556480306223128954e-3, 5.251155539989498071),
    (7.5431200633546173748e-3, 4.5763510045231824216),
    (1.5998587196060581479e-2, 3.9293883311763147654),
    (3.3932217718953285682e-2, 3.3178954557928369533),
    (7.1968567300115201993e-2, 2.7501137729462161478),
    (1.5264179671752334521e-1, 2.2341392090681211046),
    (3.23745754281764402e-1, 1.7768813715094511331),
    (6.8664884500430011569e-1, 1.3829324510410007349),
    (1.456348477501243788, 1.0536623895051174971),
    (3.0888435964774810024, 7.8686621546561738325e-1),
    (6.5512855685955088172, 5.7712710321879756579e-1),
    (1.3894954943731376371e+1, 4.1678501243895464316e-1),
    (2.9470517025518107283e+1, 2.971760336578634688e-1),
    (6.2505519252739729432e+1, 2.0976481950609358799e-1),
    (1.3257113655901090906e+2, 1.4692602480492285152e-1),
    (2.8117686979742305346e+2, 1.0232222747180512041e-1),
    (5.963623316594642997e+2, 7.0961831906024140118e-2),
    (1.2648552168552961097e+3, 4.9065796401807186565e-2),
    (2.6826957952797257477e+3, 3.3854209437406393195e-2),
    (5.6898660290182966838e+3, 2.3323905600131877277e-2),
    (1.2067926406393286371e+4, 1.6052412540339839362e-2),
    (2.5595479226995357856e+4, 1.1039960338333933715e-2),
    (5.4286754393238602677e+4, 7.5889044355903680528e-3),
    (1.1513953993264473222e+5, 5.214850633533968996e-3),
    (2.4420530945486510853e+5, 3.5826316756326208793e-3),
    (5.1794746792312111348e+5, 2.4608883158451721112e-3),
    (1.0985411419875582598e+6, 1.6901806718806591294e-3),
    (2.3299518105153720684e+6, 1.1607561890203374979e-3),
    (4.9417133613238344981e+6, 7.971241523827855992e-4),
    (1.0481131341546857363e+7, 5.4738788930296695226e-4),
    (2.222996482526194754e+7, 3.7588378101429985913e-4),
    (4.7148663634573936394e+7, 2.5810983994883388755e-4),
    (1.0e+8, 1.7723538597667854147e-4),
];

pub const EI_ROOT: f64 = 3.7250741078136663446e-1;

pub const H_LMLS: &[(f64, f64, f64, f64)] = &[
    (1.0e-7, 5.0e-1, 1.4999996250001312499e-7, 3.7499973750017718737e-21),
    (1.0e-7, 1.0, 2.9999985000010499991e-7, 1.4999979000028349958e-20),
    (1.0e-7, 2.0, 5.9999940000083999849e-7, 5.9999832000453598669e-20),
    (3.162277660168379332e-7, 5.0e-1, 4.7434127402567194815e-7, 1.1858514975687453972e-19),
    (3.162277660168379332e-7, 1.0, 9.4868179805383418169e-7, 4.7433954903422191539e-19),
    (3.162277660168379332e-7, 2.0, 1.8973605961275905803e-6, 1.8973497962444671833e-18),
    (1.0e-6, 5.0e-1, 1.4999962500131249409e-6, 3.7499737501771862006e-18),
    (1.0e-6, 1.0, 2.999985000104999055e-6, 1.4999790002834958421e-17),
    (1.0e-6, 2.0, 5.9999400008399848803e-6, 5.9998320045358669483e-17),
    (3.162277660168379332e-6, 5.0e-1, 4.7433789906676120347e-6, 1.185827873123445329e-16),
    (3.162277660168379332e-6, 1.0, 9.4866829838254350425e-6, 4.7432064992172103859e-16),
    (3.162277660168379332e-6, 2.0, 1.8973065987571896443e-5, 1.8971986104437886425e-15),
    (1.0e-5, 5.0e-1, 1.4999625013124409407e-5, 3.7497375177174507306e-15),
    (1.0e-5, 1.0, 2.9998500104990551039e-5, 1.4997900283458426756e-14),
    (1.0e-5, 2.0, 5.9994000839848833255e-5, 5.9983204534669872276e-14),
    (3.162277660168379332e-5, 5.0e-1, 4.7430415317515580647e-5, 1.1855916785817591282e-13),
    (3.162277660168379332e-5, 1.0, 9.485333312449825172e-5, 4.7413173863426992014e-13),
    (3.162277660168379332e-5, 2.0, 1.8967668615812561569e-4, 1.8956880291809801668e-12),
    (1.0e-4, 5.0e-1, 1.4996251311909699633e-4, 3.747376770576679793e-12),
    (1.0e-4, 1.0, 2.9985010490560381507e-4, 1.4979028308487446119e-11),
    (1.0e-4, 2.0, 5.9940083849131777722e-4, 5.9832452273748813932e-11),
    (3.162277660168379332e-4, 5.0e-1, 4.7396706348459993654e-4, 1.1832347127634121398e-10),
    (3.162277660168379332e-4, 1.0, 9.4718660902479435525e-4, 4.7225057271488203389e-10),
    (3.162277660168379332e-4, 2.0, 1.891393009076705591e-3, 1.8807087199766441722e-9),
    (1.0e-3, 5.0e-1, 1.4962630662602479684e-3, 3.7239258985883372172e-9),
    (1.0e-3, 1.0, 2.9851040652618582069e-3, 1.4792794083748948808e-8),
    (1.0e-3, 2.0, 5.9408252042423193461e-3, 5.8364071185634892938e-8),
    (3.162277660168379332e-3, 5.0e-1, 4.70632573360736641e-3, 1.1601517695274698708e-7),
    (3.162277660168379332e-3, 1.0, 9.3400620301857862984e-3, 4.5419859693272887587e-7),
    (3.162277660168379332e-3, 2.0, 1.8398814376355482609e-2, 1.7425030261360415056e-6),
    (1.0e-2, 5.0e-1, 1.4637564893949476147e-2, 3.5040162982130511253e-6),
    (1.0e-2, 1.0, 2.8596471731921395337e-2, 1.3147659258732552024e-5),
    (1.0e-2, 2.0, 5.4715365769395721906e-2, 4.6725586583823524222e-5),
    (3.162277660168379332e-2, 5.0e-1, 4.4048709030352564649e-2, 9.6900340975401401398e-5),
    (3.162277660168379332e-2, 1.0, 8.2479570848431557526e-2, 3.2620312954684416937e-4),
    (3.162277660168379332e-2, 2.0, 1.4712530933805978192e-1, 9.7843940611697293503e-4),
    (1.0e-1, 5.0e-1, 1.2173225860553453915e-1, 2.1653232569181739399e-3),
    (1.0e-1, 1.0, 2.0785144453893916445e-1, 5.8885834042043733389e-3),
    (1.0e-1, 2.0, 3.2696293257551147948e-1, 1.3481466287755739741e-2),
    (3.162277660168379332e-1, 5.0e-1, 2.8326132621087872778e-1, 3.2857418152204228666e-2),
    (3.162277660168379332e-1, 1.0, 4.192039447125791849e-1, 6.6670140685795082043e-2),
    (3.162277660168379332e-1, 2.0, 5.6480248251634325475e-1, 1.1337453982109739492e-1),
    (1.0, 5.0e-1, 5.1574431228262421209e-1, 3.051050929891847423e-1),
    (1.0, 1.0, 6.5567954241879847154e-1, 4.6703862725639541463e-1),
    (1.0, 2.0, 7.7282068038252352105e-1, 6.2525687105193968289e-1),
    (3.162277660168379332, 5.0e-1, 7.36365069886111801e-1, 1.8144256052064896808),
    (3.162277660168379332, 1.0, 8.3358597681719150959e-1, 2.2634522789526299185),
    (3.162277660168379332, 2.0, 9.0080621971190702743e-1, 2.6032835265146387048),
    (1.0e+1, 5.0e-1, 8.8111301584083927807e-1, 7.9089384118618212297),
    (1.0e+1, 1.0, 9.3132521802852215491e-1, 8.7487930597273149502),
    (1.0e+1, 2.0, 9.6182511928531487078e-1, 9.2860842619542004872),
    (3.162277660168379332e+1, 5.0e-1, 9.532439807452591615e-1, 2.8879632703237313733e+1),
    (3.162277660168379332e+1, 1.0, 9.7452684161824020223e-1, 3.0096210030378665587e+1),
    (3.162277660168379332e+1, 2.0, 9.8644887758911631545e-1, 3.0798078529327458762e+1),
    (1.0e+2, 5.0e-1, 9.8317785725263481512e-1, 9.6777642170411338596e+1),
    (1.0e+2, 1.0, 9.9115926239961873633e-1, 9.828539523110449345e+1),
    (1.0e+2, 2.0, 9.9541918092390431708e-1, 9.9103650026207055349e+1),
    (3.162277660168379332e+2, 5.0e-1, 9.942677404864957011e-1, 3.1269028470686385221e+2),
    (3.162277660168379332e+2, 1.0, 9.9705093873861245115e-1, 3.143948538498687826e+2),
    (3.162277660168379332e+2, 2.0, 9.9849522012647490577e-1, 3.1528775687748970074e+2),
    (1.0e+3, 5.0e-1, 9.9810820931248724851e-1, 9.9626863149053060852e+2),
    (1.0e+3, 1.0, 9.9903865276116752353e-1, 9.980961512292993926e+2),
    (1.0e+3, 2.0, 9.9951376593992759787e-1, 9.9903429329130397658e+2),
];

pub const H_LLAD: &[(f64, f64, f64, f64)] = &[
    (1.0e-7, 5.0e-1, 4.99873880861288015e-1, 2.4987389959867937985e-8),
    (1.0e-7, 1.0, 9.9949567329389524522e-1, 9.9899164618453880301e-8),
    (1.0e-7, 2.0, 1.9979838907575665061, 3.9919403501405656374e-7),
    (3.162277660168379332e-7, 5.0e-1, 4.9977577678388061191e-1, 7.8986054625074978997e-8),
    (3.162277660168379332e-7, 1.0, 9.9910358062716494538e-1, 3.1566111990899301262e-7),
    (3.162277660168379332e-7, 2.0, 1.9964181036626509869, 1.2603850608780296616e-6),
    (1.0e-6, 5.0e-1, 4.9960143232112443933e-1, 2.4960161942288408915e-7),
    (1.0e-6, 1.0, 9.984072245102795891e-1, 9.9681743629925353469e-7),
    (1.0e-6, 2.0, 1.9936408218619155551, 3.9746108817912917437e-6),
    (3.162277660168379332e-6, 5.0e-1, 4.9929175277235029898e-1, 7.8833160858408123137e-7),
    (3.162277660168379332e-6, 1.0, 9.9717172771549848425e-1, 3.1444198700406669014e-6),
    (3.162277660168379332e-6, 2.0, 1.9887244316173373552, 1.2506957554077091617e-5),
    (1.0e-5, 5.0e-1, 4.9874217117001389148e-1, 2.4874403362428735099e-6),
    (1.0e-5, 1.0, 9.9498353459335092266e-1, 9.8999666993757342975e-6),
    (1.0e-5, 2.0, 1.9800517574523009303, 3.9206743933013302712e-5),
    (3.162277660168379332e-5, 5.0e-1, 4.9776837075719791704e-1, 7.8353091160246932838e-6),
    (3.162277660168379332e-5, 1.0, 9.9112007880293891516e-1, 3.1064090680117221517e-5),
    (3.162277660168379332e-5, 2.0, 1.964846574935167613, 1.2209030123289145509e-4),
    (1.0e-4, 5.0e-1, 4.9604768288217245559e-1, 2.4606604085347488073e-5),
    (1.0e-4, 1.0, 9.8433607197963803792e-1, 9.6895981299417429149e-5),
    (1.0e-4, 2.0, 1.9384716735029439366, 3.7583051418540495411e-4),
    (3.162277660168379332e-4, 5.0e-1, 4.9302207940077074775e-1, 7.6868391412458018066e-5),
    (3.162277660168379332e-4, 1.0, 9.7253698995154741192e-1, 2.9913727341886499132e-4),
    (3.162277660168379332e-4, 2.0, 1.8935502431688309776, 1.1344163740111875381e-3),
    (1.0e-3, 5.0e-1, 4.8774717233801658902e-1, 2.3792272389676194195e-4),
    (1.0e-3, 1.0, 9.5234938402286043839e-1, 9.0733569521791847468e-4),
    (1.0e-3, 2.0, 1.819333639685277853, 3.314786164704217024e-3),
    (3.162277660168379332e-3, 5.0e-1, 4.7868511294359529662e-1, 7.2483677535418035997e-4),
    (3.162277660168379332e-3, 1.0, 9.1874637013535233867e-1, 2.6724001462333031982e-3),
    (3.162277660168379332e-3, 2.0, 1.7025292125602490381, 9.2025104097923525649e-3),
    (1.0e-2, 5.0e-1, 4.6349843707170453875e-1, 2.1503458529785677051e-3),
    (1.0e-2, 1.0, 8.6523854406641114707e-1, 7.5106853456559953035e-3),
    (1.0e-2, 2.0, 1.531604860420247515, 2.3692060114459999239e-2),
    (3.162277660168379332e-2, 5.0e-1, 4.3905502130622406636e-1, 6.1120723642023343196e-3),
    (3.162277660168379332e-2, 1.0, 7.8559135971911910061e-1, 1.9678536794634556212e-2),
    (3.162277660168379332e-2, 2.0, 1.3053542023869720335, 5.5106078306350389966e-2),
    (1.0e-1, 5.0e-1, 4.020873737215827992e-1, 1.62792622730233233e-2),
    (1.0e-1, 1.0, 6.7774569055237345681e-1, 4.68230568459307751e-2),
    (1.0e-1, 2.0, 1.0409899728283697922, 1.1335200609090099852e-1),
    (3.162277660168379332e-1, 5.0e-1, 3.5093995823297528976e-1, 3.9586418738697352966e-2),
    (3.162277660168379332e-1, 1.0, 5.4827985408271280809e-1, 9.8884149807090428795e-2),
    (3.162277660168379332e-1, 2.0, 7.7209535357879270487e-1, 2.0414956661579934606e-1),
    (1.0, 5.0e-1, 2.8790125421096575537e-1, 8.5785815013831111249e-2),
    (1.0, 1.0, 4.1275510033918321267e-1, 1.8301402126654749909e-1),
    (1.0, 2.0, 5.3383540847012985221e-1, 3.2311431356600694077e-1),
    (3.162277660168379332, 5.0e-1, 2.1999448838396816728e-1, 1.6316700685482620555e-1),
    (3.162277660168379332, 1.0, 2.8933650038099378632e-1, 2.9713516965612980188e-1),
    (3.162277660168379332, 2.0, 3.4730289590507516352e-1, 4.5602543607766211656e-1),
    (1.0e+1, 5.0e-1, 1.5640455248734624335e-1, 2.7189610212139010144e-1),
    (1.0e+1, 1.0, 1.9040202878273973088e-1, 4.2862649716826520985e-1),
    (1.0e+1, 2.0, 2.1536481703306524731e-1, 5.8561981527456292437e-1),
    (3.162277660168379332e+1, 5.0e-1, 1.0416365435755535431e-1, 4.012179496591607561e-1),
    (3.162277660168379332e+1, 1.0, 1.1910080466605245084e-1, 5.6017375201140086718e-1),
    (3.162277660168379332e+1, 2.0, 1.2896592726029679541e-1, 6.9877858653679650436e-1),
    (1.0e+2, 5.0e-1, 6.5762641916410148085e-2, 5.3410670022045904647e-1),
    (1.0e+2, 1.0, 7.1760189513585171952e-2, 6.7741350285385789919e-1),
    (1.0e+2, 2.0, 7.5409184814225736822e-2, 7.8941309883143237481e-1),
    (3.162277660168379332e+2, 5.0e-1, 3.9886673207989604018e-2, 6.5511664464660857449e-1),
    (3.162277660168379332e+2, 1.0, 4.2131893463863481574e-2, 7.728165184636231223e-1),
    (3.162277660168379332e+2, 2.0, 4.3417137520247606147e-2, 8.5735839181256066417e-1),
    (1.0e+3, 5.0e-1, 2.3523123164844184674e-2, 7.5524830168710417807e-1),
    (1.0e+3, 1.0, 2.4320882751191551699e-2, 8.4520582077128911932e-1),
    (1.0e+3, 2.0, 2.4757970871448363398e-2, 9.057963804486725189e-1),
];

