function a0_0x31379d(_0x427ea8,_0x44c735,_0x19934e,_0x45a824,_0x122fd0){return a0_0x3184(_0x44c735- -0x38a,_0x19934e);}function a0_0x17b8fb(_0x56f11a,_0x8b0c94,_0x3f96f5,_0x2d0e03,_0x1ba1f2){return a0_0x3184(_0x3f96f5-0x15,_0x8b0c94);}function a0_0x4854(){const _0x19a57d=['w3zhW5OE','kvldV1JcGa','vCkQW7T5WRC','imk6WQWMcW','r1Dipmoi','f8ktW67dJCkh','W41DWRfKWRjIBmkYesOHm0W','pSkTiWK','WPxcKJBdKZO','tSkTW796WQy','BN5fW5yQ','C8k2r8oX','WO8dW5q5W7S','WOGCW7dcNXa','CtNdJWH5','fmoGELTQ','W7ldKCoaW6T1','AuDnW7yf','je4ar8kg','WP/cOL7cPLq','W5RcT8oDvW','sL3cJfKu','WO8RWRWYfG','W4FcP3ZcO28','W6VcKx7cIMW','gSktWOeQkq','dmk3W43dHmkF','WRfMaCkDwq','W5PBWOddH8k3','A8ohW6SKWP9lymo4W4v7sCo2W40','WO9CaH8','gmkBW5FcHu0','WOVcPmkCWPCuv8oaWOmUh0W','b8ofW55VW4m','bSokCM92','W4hcOv/dQKa','DSkGzCkVDG','eL3dQ8kfWPe','nehdM8kVbG','e8oQWP5qW7K','W4NcPNRcVeG','rCkvW61kWOG','uSkRCmogwq','W6GueCoura','luuuAmks','W7JdVSo0W4zp','W6RdHmowW6z+','sCkTr8kKDq','FxhcSv8W','WP4XWRe1fG','s8k3qCkabW','nCo+WQHqW5S','WRzsjsBcMG','uHtdTrza','WQddHLq6WQG','ExPLWQxcRa','sSkut8kVaa','WO0kW4hdUmo6','WO0WW5xcLYG','n8objG','WOtcT1JdNfS','pmk6WQLBW6e','WQbVd8o2FW','mmkKtCotW7e','W7JdMbBdTty','zNNcR0G0','WOBdNCkWvJC','W5ZdNmoiW6P+','W7lcGqVdULW','WQe/W6BcVYm','WQauWQaWpa','de/dG33cMW','emkmWOVcGfy','WQ7dRmk0FWq','W4fAW5JcQdO','mSo0WPPwW4O','gu3dGCkF','u8kfF8orAG','mmkvW6RdP8kG','W4xcRvZdGua','u34uW5qp','lmkcW6BdRCks','w3dcRGLx','y8oAWODzWRq','q3LAW4q','WRhdTxamWR4','WRSbW4i','n8oCy8obW58','WRSqW4iVW6u','dCkpWOW0nW','W6tcTvdcUuu','hmk1WRtcUGe','lmkPWQ3cVv4','WOZcLdpdQGG','mxJdQ8kWWQC','W4rpW7ddMCom','DSoaW4v+WQK','amoDW6H0W4y','y1tcH2me','pw/dKfVcNq','AMNcTe8s','W7ldMCo1W4zu','W4RcQLO','W5LzW6pcHq','b8oweCkyWO8','vxLBW44','WRddT8oxqqG','AmkTqCozAG','CevpWQRcTa','W6HAW5VcPXK','WQirWPqfha','WO9+sSk6W4K','CSksW5BdKwe','WPuBuSoyra','ogi4WOGg','y8o5WPbyWQK','d1RdPmkQWQK','W5ddVmoc','g8kHWPTjWP4','mmkfW6RdVmk6','ySknq8oWsa','WO9AmI4','bCkAW6m','W7FdLutdKM4','aSkgnufS','WONcTc/dNW8','gw9zW6NdOW','eLXvW67dKW','WRldRwO2WQW','D0zMgSow','FmktymkrnG','W6NcP1FdJu0','jLXWW4NdMa','WOOiW70RW6i','db3dOSkPW6C','f8kSt8oiW7q','jItdGW','CaVdRdy','ospdP8kcW5O','feBdH8kpmG','lSoDlSkCWPG','k3JdKCkMea','kItdKmkSW5C','WPKHWOCsfq','g8k2W5hdU8k8','eCoOuh9z','W7dcMXZdGw8','n8oStvTW','WODHkSoaFW','W4/cQ1O','W43dT8owW5y','nmkjWOZcMeK','WRTgeCkgDW','W48rkSoavq','WQZcScddTGG','CuXbg8ow','cKNdKCke','iCoFzMrj','WP7dV8kxqSkg','pLldGL/cHG','W7NcMSoPtmoL','W4rmW5pdPq','lCkYWPBcOx8','W77cH33cM3G','nSkwWRjXW5W','WPbRlmoA','W7ddLSoCW7zK','uwjBW5qi','i8k1WPFcQJe','W7ldLSoMW5js','vmkcW7ZdT1K','cSkux8oXW6u','rSoTWP1BWOi','omohA2jO','tSopnCkpBq','hhaYCSkZ','W7BcUbZdMfq','ow0CqmkJ','kSkLWR7cRa','amk8WPzZW5a','lmoAiSkCWPG','pmkkj0bP','vmk2ACkpwG','amkIWPlcUGu','W79MW4RcRG8','ofKHWP8M','FN/cKCosWOBcUmknWOfCWQ1Fr8kG','hmklD8oXW6S','WPH4nCk4yq','WO1/hCoAqq','rCo8WQjvW7a','WPzRk8oBEq','WRbufmoRyq','W7hcT0lcNeO','c2SyWPiu','DCkhxmkKwG','l8oOW6SlWPa','rYX7kmo9','k8kkgKDV','ESkuW4PFWQ0','cSodW65tW6u','c8ksWPaOmq','DmkxW7JdVM8','iMtdOmk3WOS','WOxdOCoswGS','xSocWRBdGa/dNmolWQlcNmk5WQSiuW','fujvW7NdUW','vmkatSkDAG','kfi2sSko','WR1wamkeEq','dgGrWRGY','j3zSW5ddTq','Amo7WRX/WOC','ihmLWP8','WR5Aj8k7xW','hSksWO0Zla','lspdISke','W6FcL3RdTXG','tCkMrmk1iW','fSkFWO1CW6y','lCoknCkHWPK','pSkaWRVcHXW','W6Old8olsq','sNDgpSoW','W4PtW4xdICoa','mwmAWQiQ','W7pcNhZdULO','pSoMFKb3','W6VcT2ZdUuu','WQtdQL8/','kCk0WQFcPvq','WRmmW5hcJcG','uNvaW6Kj','WR4aW4i','BtVdIYPm','WQbcW5H2WQe','ASoUW7JdVaisW5JcQhddV2tcV8kd','r8kBCmkBvG','WQxdI8ohCqO','WP1DBmkKWRC','z0P8cW','kSkhW7ZdUCkW','W5HHW4JcJdi','xxdcTNmZ','DuBcJxWu','or0rWQO','WOuQWRS1','dSkxWOPaW78','W7/cJfxdNgm','DmksW59+WPG','nSo2ueDu','mmo8W6BcR0q','WPpdR3hcNa','dmkfWQRcH2a','dHJdO8k/WO0','leSXWRm6','W5tcJv/dVfS','WReBW4RcL28','dmkhefLk','qmosFmk5W4m','W4FcR3FdM3W','WOvqhSkkDq','vZBdOfia','gSojswbW','WPRdOCkAfCkBcIvQWRFdO3BcMW','WQu3WRynnW','WRtcLsRdUHm','W7hcGvBcIei','zmoVW5pdLue','k8kGW73dSSk7','zN7cPLml','WRvInY7cPW','o0m9WRC7','pSkjWO8gaa','D1rcWQS','p8kXWPNcIGC','smobWQn7WPe','WPb8pSonBG','ke0gtCk7','nCkaW43cNMu','jx/dJmkdWOG','hCkKWQm+nW','DSk2W7bdWPu','W5ZcP8onv8oe','nmkcWQqtfa','f8kRWONcMXa','WOn/mCk7Ca','rmkbW7NdHgy','WOHhpdtcLa','W4XsW4xdPSo2','WQTAhmkw','dCkeW7tcNuy','amkhWRjmW50','WOpdLxuIWPi','amoiW4TN','WOqUW6dcVqO','W7RcRt9AWPW','zGFdSsy','FeXUWRVcJG','W47cTvRcOei','W6HMW77cPqq','cMVdGmk+ha','WPHCmZpcHq','jmkyWRaSba','pmkUACoRW48','WR5FomoEFq','W4ZcG1dcHhe','pmkrrCoSW7e','W7TgWQBdV8kM','o8k5WQmvnW','D8k4W4/dTq','WObRpCoB','WP56g8kKyq','dSk8W7NdGCks','W4JdMmo2W69a','W53cUbpdI0e','W57cHH/dU3G','W6ZcOCo+tCoH','qeZcLLKh','o8o1W67cSKW','WPrgc8o8Ea','a2e9yCkI','WO1Gl8oBFW','i1pdT0q','WO8dWRNdL23dJtfFwHWAnW','WOyTW6S3W5m','WO5knCkADG','W7rXW5/cLre','afNdICkBW4S','W7NcRILlW64','dCk2W6VdL8ka','WOyAW5ZcVqS','W7PMW6pcQI8','i8oSW5pdNG','pCksW7hdP8o9','dh3dImktgW','xSkUsCk9Ca','WOVcHaNdRHW','mCkqv8oYW5q','BCkUrCk2tG','WPjaF2NdMq','WPbHdmoAEq','WPFdSqJcKr3dRSoen3mkWQFcQhC','nSkVya','ASoDWPf4WRq','wmk/W7vLWRy','jJNcHSojWPy','lYVcPSkIWOO','WOJcJdFdIJy','WQ5cdclcUW','yfH5WPZcQa','jGhdS8kjW5i','WR5bcmoPCq','h8oOW7z3W5a','fSknB8o3W6m','C3ZcRfmE','WOT5m8kJAq','gK/dHSky','kCkhW6ZdUW','rSoitmk5W54','oM05ySkJ','e8kdWPTzW6C','WR3dKeqrWPe','jg8LWPGR','WQtdQLmuWRu','x8kAW7pdHa','c2/dLNtdHq','W6JcTfRcVuG','W4OPomo4ca','xCkoAmkYmW','BSo1mmkQWPCSWQu+W53cUCoMb8oE','W7xcKh7dGMW','dmk/W7RdM8ke','WO1HmCkoiq','u2/cSeue','W5pcO0/cOfq','FmkuB8klla','i34VWR4P','DSksASkhoG','umkUW7PtWRq','WQtdO8o3Eb4','i2yXtSku','Db7dMsHO','c2Gbrmko','wSkxW7NdOvK','WQ8PWRaQfa','WPZcVXxdIde','W5FdR2FcHGm','kCkVW7FdUmk9','WRmBWQiZfG','Be11','imkKWO0+oq','W5VcPvxcSvu','W4xdNuZcNKC','lSoNW4nTW5i','fmkgW7/dHhW','WOuQWRu','WR/dRCo6EbG','ixuLWOGW','zmkGwCoNtW','xCkqW5fyWOu','WQ9soZRcHW','W4xcRNNdOwW','WPzGF8oAyW','W4WMD8kaia','WPDynCo0uG','W49FW57cLs8','WPnlfmkiAG','W6/cHfNdVuq','jCopW6fEW4S','WRFcVtBdIZa','mSkKww5e','BNPNkCoV','WOv4lCocEG','WPldL8ostWK','oCoijmkA','pLZdS0FcKq','kmkwW7ZdTmk9','l8krWQ/cMdG','WQfSEr3cQG','dxGHWP48','i8kshCk9','vSk1ASkQya','pSkdWR3cKW4','WQ1kfJtcOa','WP8uWOFcU8k/WRhcNCo+zmkjW4vwcW','m8oXzvSW','jg7dT2tcRG','WRldJCodAsu','r8kiEmkB','B8kUE8kvia','vColv8k3W7y','keFdMSkUla','WObnr8kOWRa','W4btDCkh','WQtdK1e5WPq','lLJdS14','WQpdOgesWQq','g8kSWRZcJxa','WRldOCoGyGm','s8kOtSoAsW','vmkDW7tdLa','pmk1WQdcRq','W49cW6ZcGJG','WOqOW6lcKta','W5ZdVuhcKWW','m8kywLD0','pmkabKj6','mSo0WPz9','nmo/WRfAW78','mmomnCkbWPG','sSkOu8k9xq','amkvW6NcL3W','WRPwe8kaEW','oCo2kaaW','zWhdStfU','sCk2rCkHyq','rmkrW67dHxS','WPjjWQW7W7q','amoFBx1F','WPeSWOtdQSkJW6LlBW','wmostSkP','WO8RWQCVdq','zxPHW4Cc','DNPDW6yn','wmo6zSkNW5K','W59gW7pdI8om','A8kUyCk0gG','W4VcV8oRvSoT','k8o4jeP3','uqtdHIL4','B1P/W7Kv','W4ZcPSoVwCoc','W7WAnmoqW40BWRHGEbNdPq','Bmk4B8oZwq','WPG9WQiK','h8o9bSk3W44','WP/dI041WOu','FmkiyCkqAG','j8kgWONcUsu','W7JcGJJdRhC','ab7dSmkXW6O','WQTbjSoNyG','zmkUw8o4','W442WRC1da','mw/dGSktca','A8ogW6KKWPbkAmoQW6zvrSoNW6q','W6a/pSouwq','WRS+W4CoW5u','gSkKsCoBW68','WRSQW4a1W5S','tSkmACkaDW','yY/dUILa','yejZW79q','DCoYv8kmW7q','Bmk7wCkNDW','umoKWQ1pWOS','kSk7WOHeW5S','dSkcWOZcMqS','WPNdSSoCwc4','afNdICkBW4O','mmoCnCkAWOi','k8ouWO4fW6ZcMSogpXm2WO0Qwq','hhaHB8k4','W7ZcGNZcJrK','n8kkWOC9iG','Dhb5oCo0','WPbbkchcPq','pLTF','yLvHW7Gf','jmkDW6pcK24','WOBcUNBdNZC','WQKjgSotrq','WOOiW4tcPWxcRI17','hSoUwh5t','W63cUSoDtttdMrHE','d2rHW7pdNG','zCkMwCoW','WQ43WOiVmW','yCowWOzVWRe','aSo3WPldOHe','BSoEWRvEWQa','sCkpW7D2WQO','W7hcKXBdLKW','pt/dH8kuW5e','WRpdSw8sW68','q8kaC8kABa','feBdHa','A1bMhCor','z8obWOT5WRu','W7DrW6pdRCoM','oCksWRb6','hmkfWPyYmq','jCkBWRddTSk6','oCkHWONcIG','WO0NWQyOfG','W55BW5RdQmob','Eh1sW5ui','sCkJrCkFCq','kLawsmke','jrddKmkyW7q','kNNdJCknma','emkfWQ/cHKS','W7DWW63dVCoN','ySkCASkmBq','W6fMW5/dOCo7','eCkhW67dH8k6','pd7dGCkoW5S','nMpdP8kOWPO','W7dcRxqsWRi','BSk2FmkMyG','xebupSod','pColW79m','W7edgSkWFmkkWP01'];a0_0x4854=function(){return _0x19a57d;};return a0_0x4854();}(function(_0x182ea7,_0x1419cd){function _0x521e35(_0x30380b,_0x174447,_0x2a21a9,_0x18db03,_0x3db38b){return a0_0x3184(_0x174447- -0xf,_0x18db03);}function _0x88ddf4(_0x5c4b44,_0x2fbf2a,_0x55eaf8,_0x29b1d2,_0x30b01a){return a0_0x3184(_0x5c4b44-0x57,_0x2fbf2a);}function _0x4ca328(_0x4a7f25,_0x3b037c,_0x43f977,_0x3c359e,_0x4121d2){return a0_0x3184(_0x3c359e- -0x3b3,_0x3b037c);}const _0x47f703=_0x182ea7();function _0x579606(_0x567555,_0x57bbef,_0x54cc63,_0x112d9a,_0x4c8cc8){return a0_0x3184(_0x57bbef- -0x109,_0x54cc63);}function _0x4a7116(_0x342692,_0x14fb0b,_0x15e5e9,_0x599aac,_0x41b312){return a0_0x3184(_0x15e5e9-0x10a,_0x41b312);}while(!![]){try{const _0x32ac96=-parseInt(_0x4ca328(-0x229,'mcxD',-0xbb,-0x1c9,-0xf7))/(-0xdb8+-0x7f7+-0x2*-0xad8)*(-parseInt(_0x579606(0x184,0x10b,'931v',0x45,0x1fd))/(-0x3*-0x617+-0xacb*0x3+-0xe1e*-0x1))+parseInt(_0x88ddf4(0x1da,'Lac3',0x1d7,0x1f2,0x1f0))/(-0xb*-0x1b6+0x14a7*0x1+-0x2776)+-parseInt(_0x88ddf4(0x24e,'Jw2C',0x167,0x224,0x24d))/(-0x1cae+0x2*0x686+-0x2*-0x7d3)+parseInt(_0x4ca328(-0x239,'K$l3',-0x18b,-0x172,-0x107))/(0xf4e+0x10*0x121+-0x2159*0x1)+-parseInt(_0x4a7116(0x3a4,0x399,0x412,0x40d,'pfdp'))/(0xd3d*0x1+0x3e4+-0x111b)+parseInt(_0x521e35(0x29,0xee,0x182,'DuQZ',0x1a7))/(0x2*0x7e7+0xfb5+-0x1f7c)+parseInt(_0x579606(0x1e5,0xd4,'g$ay',0x4d,0x1b2))/(0x26a7+-0x2*0x741+-0x1*0x181d)*(-parseInt(_0x579606(0x59,0x4c,'EiGC',0x81,-0x8))/(0xfb*-0xc+0xc9c+-0xcf));if(_0x32ac96===_0x1419cd)break;else _0x47f703['push'](_0x47f703['shift']());}catch(_0x27b9c7){_0x47f703['push'](_0x47f703['shift']());}}}(a0_0x4854,0x2db23+-0x7645d+0x985ae));const a0_0x4b0066=(function(){function _0x33cf30(_0x338e3c,_0x19b038,_0x5528bf,_0x1ecc46,_0x2ddb73){return a0_0x3184(_0x5528bf- -0x3d3,_0x338e3c);}function _0x273a07(_0xd0184a,_0x5883ed,_0xafdf30,_0x4a49b0,_0x3ddfa7){return a0_0x3184(_0x5883ed- -0x140,_0x4a49b0);}function _0xe7525b(_0x1ffd61,_0xb79f0a,_0x20c2e9,_0xd20b91,_0x2863cf){return a0_0x3184(_0x2863cf- -0x1c3,_0xd20b91);}function _0x903f5e(_0x176bd7,_0xd672e3,_0x582d7b,_0x3013ae,_0x54745a){return a0_0x3184(_0x176bd7-0x3a6,_0x3013ae);}const _0x131cdc={'GYMUi':function(_0x1b4d8d,_0x38ba16){return _0x1b4d8d!==_0x38ba16;},'WjiFj':_0x903f5e(0x4b7,0x47f,0x545,'yDWF',0x583),'hBaKp':_0x273a07(0x68,0x6d,0xd0,')3Vk',0x167),'qJSMg':function(_0x55ec6a,_0x11b16c){return _0x55ec6a===_0x11b16c;},'ZsUzW':_0x273a07(0x1ba,0x1ab,0x17b,'8Mvl',0x1e6),'SqaAI':function(_0x491b53,_0x393504){return _0x491b53(_0x393504);},'Xvtfo':_0x273a07(0x13f,0x1d4,0x23e,'yDWF',0x28f),'LGayB':_0x903f5e(0x5db,0x61f,0x69b,'5a*7',0x53a)+_0x33cf30('6Y1]',-0x91,-0x15f,-0x52,-0x273)+_0x273a07(-0x3,-0x29,-0x100,'6Ol&',0xc9),'JcAuw':_0xe7525b(-0x5f,0x36,-0xa3,'wdVh',0x1c)+'er','tscmj':_0x903f5e(0x532,0x56f,0x44f,'7#*b',0x647),'jpPTa':_0x33cf30('SN57',-0x1f0,-0x291,-0x31b,-0x17d)};let _0x70c102=!![];function _0x12f2f6(_0x422382,_0x71e91a,_0x373215,_0x3d67e9,_0xd171da){return a0_0x3184(_0x422382-0x1c3,_0x373215);}return function(_0x75cdc3,_0x125429){function _0x38a29a(_0x204063,_0x1c9571,_0x46c698,_0x42e58d,_0x3fa2a7){return _0x903f5e(_0x3fa2a7- -0x33e,_0x1c9571-0x9f,_0x46c698-0x1a,_0x46c698,_0x3fa2a7-0x27);}function _0x429913(_0x1b8073,_0x3cde2f,_0x5b1e5f,_0x2e689e,_0x8767c5){return _0x903f5e(_0x3cde2f- -0x4e8,_0x3cde2f-0x19,_0x5b1e5f-0xcf,_0x8767c5,_0x8767c5-0x1b7);}const _0xe9b88={};_0xe9b88[_0x46e289(0x6dd,'SN57',0x647,0x6ae,0x674)]=_0x131cdc[_0x46e289(0x5b8,'G@hs',0x545,0x512,0x46d)];function _0x32a8df(_0x7fc9fb,_0x8cf71e,_0xdf0d76,_0x3442a7,_0x5cc99a){return _0x903f5e(_0x5cc99a- -0x1ed,_0x8cf71e-0x62,_0xdf0d76-0x96,_0xdf0d76,_0x5cc99a-0x1d1);}function _0x4e5a5c(_0x2aa5b2,_0x2ee823,_0x19365a,_0x201781,_0x2e75c2){return _0x903f5e(_0x19365a- -0xc9,_0x2ee823-0x13d,_0x19365a-0xec,_0x201781,_0x2e75c2-0xfa);}_0xe9b88[_0x4e5a5c(0x489,0x4c8,0x514,'afu*',0x621)]=_0x131cdc[_0x46e289(0x6e2,'^PXT',0x606,0x6aa,0x608)];function _0x46e289(_0x367888,_0x32bdc3,_0x45b9de,_0x21aee3,_0x2f423a){return _0x903f5e(_0x45b9de- -0x57,_0x32bdc3-0x1e9,_0x45b9de-0x1ed,_0x32bdc3,_0x2f423a-0x7f);}const _0xca4f49=_0xe9b88;if(_0x131cdc[_0x38a29a(0x1f7,0x2b1,'7#*b',0x20e,0x1d2)](_0x131cdc[_0x38a29a(0x223,0x3cd,'bBH4',0x3bd,0x2bc)],_0x131cdc[_0x46e289(0x5f0,'4PXk',0x569,0x4b6,0x4ec)])){const _0x1517d1=_0x70c102?function(){function _0x93052f(_0x568c5b,_0x4e2a23,_0x5916f6,_0x92a404,_0x349954){return _0x38a29a(_0x568c5b-0x81,_0x4e2a23-0x1ad,_0x92a404,_0x92a404-0x149,_0x568c5b- -0x30d);}function _0x3b2573(_0x3d4c22,_0x191b48,_0x48bcba,_0x16a8ce,_0x481763){return _0x38a29a(_0x3d4c22-0xc0,_0x191b48-0xb6,_0x3d4c22,_0x16a8ce-0x8,_0x481763-0x195);}function _0x258ab5(_0xaf434c,_0x353ff0,_0x1a874c,_0x11ccf1,_0x4ffe1f){return _0x38a29a(_0xaf434c-0x49,_0x353ff0-0x113,_0x353ff0,_0x11ccf1-0x1c1,_0x1a874c-0x26f);}function _0x14f3b3(_0x104d0a,_0x5eddd2,_0xd88972,_0x5c728e,_0x511c93){return _0x38a29a(_0x104d0a-0x21,_0x5eddd2-0x14b,_0xd88972,_0x5c728e-0x147,_0x5eddd2-0x1a0);}function _0x11d53b(_0x240512,_0x450062,_0x281b49,_0x3c0068,_0x4aa6f5){return _0x38a29a(_0x240512-0x4e,_0x450062-0x6f,_0x4aa6f5,_0x3c0068-0x24,_0x3c0068- -0x238);}if(_0x131cdc[_0x258ab5(0x444,'6Ol&',0x3dc,0x447,0x358)](_0x131cdc[_0x258ab5(0x5c5,'kHcm',0x4b8,0x3b4,0x4b3)],_0x131cdc[_0x3b2573('Tb6Y',0x483,0x4d4,0x426,0x4e5)])){if(_0x125429){if(_0x131cdc[_0x258ab5(0x345,'N0q^',0x422,0x4f7,0x50f)](_0x131cdc[_0x11d53b(0x45,0x82,-0x4a,0x78,'G2Vy')],_0x131cdc[_0x3b2573('7#*b',0x43b,0x378,0x497,0x461)])){const _0x1132fc=_0x125429[_0x3b2573('6Ol&',0x365,0x490,0x2fa,0x384)](_0x75cdc3,arguments);return _0x125429=null,_0x1132fc;}else return!![];}}else return function(_0x5556ba){}[_0x3b2573(']w68',0x429,0x4b6,0x4f1,0x439)+_0x14f3b3(0x400,0x4f7,'*^Fo',0x46a,0x4e7)+'r'](_0xca4f49[_0x11d53b(-0xff,0x1d,-0x128,-0x95,']YiT')])[_0x11d53b(-0x13b,-0x11b,-0x2a,-0x9c,'pfdp')](_0xca4f49[_0x14f3b3(0x472,0x437,'DuQZ',0x4ef,0x42f)]);}:function(){};return _0x70c102=![],_0x1517d1;}else _0x131cdc[_0x4e5a5c(0x3b9,0x469,0x3dd,'mcxD',0x3a1)](_0x980974,_0x131cdc[_0x4e5a5c(0x68c,0x5f5,0x57c,'6Ol&',0x488)]);};}()),a0_0x5e7ae2=a0_0x4b0066(this,function(){const _0x412f18={'LlQJN':function(_0x2f995e,_0x45bf55){return _0x2f995e(_0x45bf55);},'KCeIR':function(_0x3b1453,_0x4fc2e1){return _0x3b1453+_0x4fc2e1;},'ZOJex':function(_0x176de0,_0x2e5089){return _0x176de0+_0x2e5089;},'iLXvi':_0x2df0d7(-0x130,-0x1b4,-0xd0,-0x11b,')3Vk')+_0x3c9a91(0x2d9,0x1f1,0x363,'afu*',0x31f)+_0x3c9a91(0x2a2,0x294,0x200,'7Vgi',0x21e)+_0x3c9a91(0x127,0x168,0x6d,'bBH4',0x45),'zfszy':_0x4df7eb('^PXT',0x2d4,0x40a,0x2f9,0x3a4)+_0x327f84(0x64,0xce,'4PXk',-0x30,-0xb0)+_0x2df0d7(-0x2db,-0x336,-0x22d,-0x322,'7Vgi')+_0x4df7eb('4Xhm',0x3db,0x358,0x261,0x371)+_0x2df0d7(-0x1c9,-0xe3,-0x108,-0x207,'931v')+_0x2df0d7(-0x139,-0x4e,-0xfa,-0x1,'*^Fo')+'\x20)','Ymfuo':function(_0xbc3572){return _0xbc3572();},'vpbah':function(_0x49c30d,_0x3efeb1){return _0x49c30d!==_0x3efeb1;},'XQYyD':function(_0x2775b3,_0x244b3d){return _0x2775b3!==_0x244b3d;},'SVsDY':_0x327f84(0x139,0x5f,'N0q^',0xe5,0x137),'LgyNk':_0x2d0029('SN57',-0x12b,-0xed,-0x37,-0x5e)+_0x327f84(0x11,-0x51,'PbtF',-0x3f,-0x109)+'+$'};function _0x327f84(_0x481e2b,_0x5b0f39,_0x19aa1b,_0x40fd27,_0x11d16c){return a0_0x3184(_0x40fd27- -0x199,_0x19aa1b);}function _0x3c9a91(_0x386bf8,_0xc20dc8,_0x39019b,_0x1b646d,_0x2c0993){return a0_0x3184(_0x386bf8- -0x10,_0x1b646d);}if(_0x412f18[_0x3c9a91(0x1a2,0x1ae,0x269,'7Vgi',0x127)](a0_0x5e7ae2[_0x4df7eb('DuQZ',0x426,0x433,0x3aa,0x3a0)]()[_0x4df7eb('^PXT',0x5b3,0x44b,0x40f,0x4c5)+_0x327f84(0x8c,0x206,'pfdp',0x11c,0x1d0)]()[_0x2d0029('cdaJ',-0x53,0x50,-0x96,-0x78)+'Of']('\x0a'),-(-0x32*0x25+-0x1030+0x1*0x176b))){if(_0x412f18[_0x2df0d7(-0xa6,-0x237,-0x177,-0x27f,'zexB')](_0x412f18[_0x2d0029('N0q^',0x22,0x11c,0x64,0x66)],_0x412f18[_0x327f84(0x6,-0xd8,'EiGC',-0x5c,0x24)])){const _0x327fe3=_0x412f18[_0x327f84(0x15a,0x197,'Jw2C',0x17d,0x1c5)](_0x2a2f2f,_0x412f18[_0x4df7eb('N0q^',0x459,0x485,0x4a3,0x420)](_0x412f18[_0x3c9a91(0x2de,0x265,0x1ec,'Jw2C',0x337)](_0x412f18[_0x2df0d7(-0x1f9,-0x56,-0x161,-0x8e,'afu*')],_0x412f18[_0x2df0d7(-0x25d,-0xc0,-0x151,-0x157,'kHcm')]),');'));_0x18efec=_0x412f18[_0x2d0029('kHcm',0xf8,-0x61,-0xdc,0x27)](_0x327fe3);}else return;}function _0x4df7eb(_0x159c3b,_0x411c84,_0x379ca6,_0x479ac7,_0x37b927){return a0_0x3184(_0x37b927-0x1d5,_0x159c3b);}function _0x2d0029(_0x55f2e4,_0x5ab543,_0xec6a8e,_0x50aa95,_0x1944f0){return a0_0x3184(_0x1944f0- -0x203,_0x55f2e4);}function _0x2df0d7(_0x49526d,_0x21009d,_0x525944,_0x1576c0,_0x160f94){return a0_0x3184(_0x525944- -0x38c,_0x160f94);}return a0_0x5e7ae2[_0x4df7eb('EiGC',0x33c,0x3df,0x445,0x37c)+_0x327f84(-0x61,0xb9,')3Vk',-0x2,0xc3)]()[_0x327f84(-0xa3,0x31,'T)!4',0x3d,0x3c)+'h'](_0x412f18[_0x3c9a91(0x2ec,0x2ce,0x2ef,'*3Q[',0x375)])[_0x2d0029('Lu%n',0x178,0x139,-0x3a,0x83)+_0x3c9a91(0x2a0,0x212,0x247,'N0q^',0x3a0)]()[_0x4df7eb('@Ih4',0x4f9,0x3af,0x4b8,0x43b)+_0x327f84(0x17d,0x73,'T)!4',0x13a,0x171)+'r'](a0_0x5e7ae2)[_0x4df7eb('Lu%n',0x500,0x50b,0x440,0x443)+'h'](_0x412f18[_0x4df7eb('5V8r',0x383,0x468,0x4ab,0x39e)]);});a0_0x5e7ae2();function a0_0x1a4e0e(_0x46191a,_0x84bafb,_0x5716f6,_0x46e012,_0xabe66d){return a0_0x3184(_0x46e012- -0x180,_0xabe66d);}const a0_0x261bb3=(function(){function _0x108d5a(_0x359fe2,_0x4968e2,_0x11bc7f,_0x4dbf5e,_0x5e8dc1){return a0_0x3184(_0x5e8dc1- -0x24e,_0x359fe2);}function _0x406d43(_0x3ec960,_0x48aa0c,_0x367e83,_0x1d0f3b,_0x1e4ebf){return a0_0x3184(_0x1e4ebf- -0x323,_0x48aa0c);}function _0x3b5d10(_0x1201d9,_0x257070,_0x5e1a07,_0x5f1341,_0x16d0a2){return a0_0x3184(_0x1201d9- -0x310,_0x257070);}function _0x213ee1(_0x19ad00,_0x30770b,_0x5d0f7e,_0x1678d3,_0x412341){return a0_0x3184(_0x1678d3-0x1f4,_0x5d0f7e);}const _0x3a62f2={'ueUSl':function(_0x38e5ca,_0x571e85){return _0x38e5ca(_0x571e85);},'qUkyQ':function(_0x1d8dda,_0x5d4d46){return _0x1d8dda+_0x5d4d46;},'AVnKr':function(_0xeb5e52,_0x3d61f7){return _0xeb5e52+_0x3d61f7;},'CFvgc':_0x156d43(0x127,-0x9d,')3Vk',0x42,-0xc2)+_0x156d43(-0x30,-0x14a,'5a*7',-0x10e,-0x18)+_0x156d43(-0x8a,-0x61,'*^Fo',-0xa7,-0xcb)+_0x156d43(-0xa2,0x5a,'Tb6Y',-0x38,-0x8c),'ETENR':_0x3b5d10(-0x12a,'Tb6Y',-0x115,-0xa0,-0x22a)+_0x108d5a('*^Fo',0xc7,-0x91,0x2e,-0x48)+_0x156d43(-0x25d,-0x108,'G2Vy',-0x168,-0x21b)+_0x3b5d10(-0xff,'@Ih4',-0x53,-0x46,-0x1f2)+_0x406d43(-0x287,'SN57',-0x12f,-0xf8,-0x17f)+_0x406d43(-0x16a,'Ku(2',-0x215,-0x2c7,-0x1be)+'\x20)','OOyIi':function(_0x5733b1){return _0x5733b1();},'NPEIg':_0x213ee1(0x45f,0x575,'mcxD',0x49e,0x4a1),'IupXR':_0x3b5d10(-0x18f,'@Ih4',-0x272,-0x193,-0x1f2),'xacsr':function(_0x26b037,_0x367aa3){return _0x26b037===_0x367aa3;},'avxzG':_0x406d43(-0xb0,'G2Vy',-0xb3,0x4d,-0xa3),'ppFjr':function(_0x2f48ee,_0x517f88){return _0x2f48ee!==_0x517f88;},'YtIoZ':_0x3b5d10(-0xc6,'Tb6Y',-0x153,0x1a,-0x74),'GVeLX':_0x213ee1(0x3c7,0x429,'G2Vy',0x350,0x2e1),'vZwCx':function(_0x49b434,_0x3e5b1f){return _0x49b434===_0x3e5b1f;},'xUsoA':_0x156d43(0x147,-0x5,'Tb6Y',0x54,-0xad),'SjVFD':_0x108d5a('d5Jd',0x8,0x49,0x137,0x22)};let _0x460214=!![];function _0x156d43(_0x25fb04,_0x3bf5ab,_0xd11f4,_0x36ebf1,_0x49aeb0){return a0_0x3184(_0x36ebf1- -0x27a,_0xd11f4);}return function(_0x4dca25,_0x4efbed){function _0x1a4e7f(_0x4befb0,_0x1a5f0d,_0x3dfa4a,_0x3ae8fc,_0x1a34e0){return _0x406d43(_0x4befb0-0x120,_0x3dfa4a,_0x3dfa4a-0xdd,_0x3ae8fc-0xaa,_0x4befb0-0x4bb);}function _0x1a1eb9(_0x9190b8,_0x3e88df,_0x11a34a,_0x368243,_0x8334d3){return _0x406d43(_0x9190b8-0x132,_0x3e88df,_0x11a34a-0xb1,_0x368243-0xec,_0x9190b8-0x3ab);}function _0x4ce9e1(_0x9dc6e3,_0x1ff70e,_0x364e48,_0xa2c58,_0x36872b){return _0x406d43(_0x9dc6e3-0x80,_0x9dc6e3,_0x364e48-0x16b,_0xa2c58-0x9,_0x36872b-0x3e2);}function _0x198cec(_0x190f14,_0x19848f,_0x139d12,_0x573f80,_0x2572af){return _0x406d43(_0x190f14-0x195,_0x139d12,_0x139d12-0x9a,_0x573f80-0xee,_0x190f14-0x14a);}function _0x332cfb(_0x45cb8d,_0x573617,_0x1836a6,_0x31989c,_0x48686e){return _0x406d43(_0x45cb8d-0x1a8,_0x1836a6,_0x1836a6-0x193,_0x31989c-0x17,_0x45cb8d- -0xb7);}const _0x3be5c6={'IsdLN':function(_0x2e19ea,_0x5b045a){function _0x29f078(_0x3bb0cc,_0x1febcb,_0x4f0f65,_0x313d2c,_0x245c39){return a0_0x3184(_0x313d2c- -0x1c5,_0x245c39);}return _0x3a62f2[_0x29f078(0x1b8,0x1c3,0x2d,0x105,'wdVh')](_0x2e19ea,_0x5b045a);},'bUUfP':_0x3a62f2[_0x1a1eb9(0x30b,'DuQZ',0x3b9,0x219,0x2fb)],'EimdI':_0x3a62f2[_0x1a4e7f(0x3d8,0x4a4,'7Vgi',0x2c4,0x3e9)],'WHGoN':function(_0xf95de7,_0x37b9b6){function _0x40711c(_0x3524de,_0x309641,_0x470503,_0x3616c0,_0x7f5e96){return _0x1a1eb9(_0x309641- -0x302,_0x7f5e96,_0x470503-0x94,_0x3616c0-0x1ce,_0x7f5e96-0xa);}return _0x3a62f2[_0x40711c(-0x133,-0xed,-0x31,0x16,'931v')](_0xf95de7,_0x37b9b6);},'NkRWK':_0x3a62f2[_0x1a4e7f(0x358,0x43e,'nGWf',0x2a1,0x3a1)],'btAzi':function(_0x575f66,_0x2c5ae2){function _0xd4f219(_0x594d25,_0x1ca581,_0x26ee04,_0x36b5b,_0x28023c){return _0x1a1eb9(_0x36b5b-0x41,_0x594d25,_0x26ee04-0xff,_0x36b5b-0xcd,_0x28023c-0x13b);}return _0x3a62f2[_0xd4f219('d5Jd',0x14e,0x205,0x258,0x223)](_0x575f66,_0x2c5ae2);},'LbbHB':_0x3a62f2[_0x198cec(-0xb1,-0x5f,'pfdp',0xc,0x9)],'viCbd':_0x3a62f2[_0x332cfb(-0xcf,-0x121,'mkIZ',-0x59,-0xe5)]};if(_0x3a62f2[_0x1a1eb9(0x23f,'afu*',0x22b,0x1ab,0x258)](_0x3a62f2[_0x332cfb(-0x184,-0x266,'T)!4',-0x187,-0x13a)],_0x3a62f2[_0x198cec(0xcf,0x1f,'EiGC',-0x2b,0x58)])){let _0x591120;try{const _0x258373=_0x3a62f2[_0x1a1eb9(0x1f7,']YiT',0x192,0x202,0x1ea)](_0x563951,_0x3a62f2[_0x198cec(-0x79,-0x96,'G@hs',-0xb5,-0x87)](_0x3a62f2[_0x1a4e7f(0x2f5,0x356,'EiGC',0x31e,0x29e)](_0x3a62f2[_0x198cec(0x2a,0xfc,'RWje',0x83,0x4d)],_0x3a62f2[_0x4ce9e1('mkIZ',0x3a6,0x298,0x3d5,0x2eb)]),');'));_0x591120=_0x3a62f2[_0x1a4e7f(0x38b,0x325,'SN57',0x338,0x47d)](_0x258373);}catch(_0x365299){_0x591120=_0x25092b;}_0x591120[_0x332cfb(-0xc3,-0x11d,'*^Fo',-0x1bc,-0x1cb)+_0x198cec(0x133,0x119,'T)!4',0x22d,0x100)+'l'](_0x149242,-0x1d25+-0x11c3+-0x536*-0xc);}else{const _0x3a084e=_0x460214?function(){function _0x11ea06(_0x34666d,_0x54c399,_0x1f5f5d,_0x21dbcf,_0x372684){return _0x4ce9e1(_0x34666d,_0x54c399-0xdc,_0x1f5f5d-0x17e,_0x21dbcf-0x0,_0x372684- -0x3bd);}function _0x227e63(_0x1795da,_0x381bb9,_0x1ca7c3,_0x40d18e,_0x47a875){return _0x4ce9e1(_0x1ca7c3,_0x381bb9-0x12,_0x1ca7c3-0x41,_0x40d18e-0x16c,_0x1795da-0x1be);}function _0x150a3f(_0xa7e230,_0x34957c,_0x5326f5,_0x4cfc4c,_0x2a71ae){return _0x4ce9e1(_0x34957c,_0x34957c-0x72,_0x5326f5-0x142,_0x4cfc4c-0xd4,_0x2a71ae- -0x2f3);}function _0x649834(_0x43c36e,_0x1f42fb,_0x4809f9,_0x24a88f,_0x37cdd8){return _0x4ce9e1(_0x37cdd8,_0x1f42fb-0xac,_0x4809f9-0x172,_0x24a88f-0xc7,_0x43c36e-0x9d);}const _0x16c24b={'GCDhZ':function(_0x14e08f,_0x55c865){function _0x2fa7d1(_0x2f3802,_0x1964a6,_0x541eac,_0x2c23fd,_0x1e9625){return a0_0x3184(_0x2f3802- -0x1d2,_0x2c23fd);}return _0x3be5c6[_0x2fa7d1(-0xb8,-0x7f,-0xad,'wdVh',-0x61)](_0x14e08f,_0x55c865);},'mUDqV':_0x3be5c6[_0x649834(0x30f,0x3ac,0x2f7,0x319,'RWje')],'nqmTY':function(_0xfb7efb,_0x54b1a3){function _0xf79de5(_0xbeb9a,_0x2bbd3f,_0x41668c,_0x4039ab,_0x4dc936){return _0x649834(_0x41668c- -0x171,_0x2bbd3f-0x69,_0x41668c-0x4f,_0x4039ab-0xf,_0x4039ab);}return _0x3be5c6[_0xf79de5(0x24f,0x2e6,0x287,'v(Ij',0x2be)](_0xfb7efb,_0x54b1a3);},'hfzbW':_0x3be5c6[_0x649834(0x416,0x4f5,0x388,0x351,'zexB')]};function _0x209c9b(_0x2f1850,_0x4b3f90,_0x5d6000,_0x5a0bf3,_0x43b557){return _0x4ce9e1(_0x4b3f90,_0x4b3f90-0x14c,_0x5d6000-0xe2,_0x5a0bf3-0xa2,_0x5a0bf3-0x2bf);}if(_0x3be5c6[_0x649834(0x437,0x419,0x4f6,0x510,'QE3(')](_0x3be5c6[_0x150a3f(-0x4a,'Tb6Y',-0xac,-0x73,-0x21)],_0x3be5c6[_0x209c9b(0x4f5,'v(Ij',0x62c,0x5da,0x515)])){if(_0x4efbed){if(_0x3be5c6[_0x227e63(0x466,0x352,'QE3(',0x573,0x4f1)](_0x3be5c6[_0x11ea06('mkIZ',-0x211,-0xa7,-0x24f,-0x170)],_0x3be5c6[_0x227e63(0x542,0x625,'CibP',0x5cc,0x612)])){const _0xa326c5=_0x4efbed[_0x11ea06('PbtF',0x1f,-0x13,0x15,-0x6e)](_0x4dca25,arguments);return _0x4efbed=null,_0xa326c5;}else return;}}else _0x16c24b[_0x150a3f(0x93,'K$l3',-0x138,-0xf4,-0x39)](_0x8e8acc,_0x16c24b[_0x150a3f(-0x37,'PbtF',0x3f,-0x8b,-0xb9)]),_0x16c24b[_0x11ea06('RWje',-0x46,-0xc7,0xc0,-0x1b)](_0x4fa33b,_0x16c24b[_0x11ea06('8Mvl',-0x18f,-0x50,-0xc1,-0xe2)]);}:function(){};return _0x460214=![],_0x3a084e;}};}());(function(){function _0x372536(_0x4283dc,_0x45c9f5,_0x23ecf4,_0x34c389,_0x3255da){return a0_0x3184(_0x34c389-0x338,_0x3255da);}const _0x57bd6e={'QKGJy':function(_0x19bad3,_0x4eb7a0){return _0x19bad3(_0x4eb7a0);},'pCTZo':_0x45f1f3(0x3b0,0x48d,0x4cf,'hzHF',0x409)+_0x2771fe(0x66e,0x5d7,0x5e2,0x514,'6Ol&')+_0x2771fe(0x3f0,0x4e4,0x4f4,0x593,'8Mvl')+')','RYdNQ':_0x2771fe(0x540,0x446,0x372,0x4f5,'K$l3')+_0x372536(0x417,0x395,0x4f9,0x471,'PbtF')+_0x372536(0x4ff,0x409,0x3fc,0x506,'*3Q[')+_0x2771fe(0x551,0x4fe,0x60b,0x599,'Ku(2')+_0x2771fe(0x3c7,0x475,0x433,0x517,'Lu%n')+_0x372536(0x5ff,0x5da,0x462,0x547,'DuQZ')+_0x2771fe(0x534,0x50d,0x553,0x409,'SN57'),'lGIjh':_0x1bba0b(0x32,'4Xhm',0xa6,0xdf,0x5b),'oovZN':function(_0x42a5b3,_0x491a26){return _0x42a5b3+_0x491a26;},'CWFIY':_0x1bba0b(0x8,'cdaJ',0xb1,0x156,0x5d),'Tafzv':function(_0x1693c5,_0x14ebdb){return _0x1693c5+_0x14ebdb;},'pHTRs':_0x2771fe(0x5b3,0x617,0x683,0x567,'8Mvl'),'sDAyt':function(_0x44d7b2){return _0x44d7b2();},'UYARt':function(_0x57c4d2,_0x5b449b){return _0x57c4d2!==_0x5b449b;},'jGNTE':_0x2771fe(0x463,0x4da,0x4d2,0x5cb,'mkIZ'),'AOxAE':_0x1bba0b(0xfc,'PbtF',0x1e3,0x195,0x1be),'PimAC':function(_0x1b331c,_0x518b9e){return _0x1b331c+_0x518b9e;},'MrQQk':function(_0x4eed3c,_0x57c4dc){return _0x4eed3c===_0x57c4dc;},'fIuMI':_0x24a1ce(0x570,0x6e4,0x6e6,'d5Jd',0x61a),'kwXgy':_0x372536(0x401,0x40d,0x3d9,0x4d0,'bBH4'),'MfhDm':function(_0xa38524,_0x3ede43){return _0xa38524(_0x3ede43);},'YcFQg':_0x24a1ce(0x564,0x71f,0x624,'5V8r',0x636),'EprDA':function(_0xd46b25,_0x1a03a6,_0x3bac0a){return _0xd46b25(_0x1a03a6,_0x3bac0a);}};function _0x2771fe(_0x52e61d,_0x56c8ca,_0x8d1180,_0x4389d6,_0x18290e){return a0_0x3184(_0x56c8ca-0x34a,_0x18290e);}function _0x24a1ce(_0x372734,_0x1bf227,_0x2bfe20,_0x3e1f21,_0x499989){return a0_0x3184(_0x499989-0x3d1,_0x3e1f21);}function _0x1bba0b(_0xfb5ef4,_0x3ef53a,_0x52cc69,_0x4e953e,_0x3c2d23){return a0_0x3184(_0x52cc69- -0xd8,_0x3ef53a);}function _0x45f1f3(_0x8698a0,_0x95dcb1,_0x3a1bc9,_0x2e2e1e,_0x4f3529){return a0_0x3184(_0x4f3529-0x28d,_0x2e2e1e);}_0x57bd6e[_0x1bba0b(0x1cb,'DuQZ',0xef,0x102,0x17e)](a0_0x261bb3,this,function(){function _0x3f49f8(_0x4ffeb7,_0xc8c960,_0x297643,_0x1da6ed,_0xf35ed){return _0x24a1ce(_0x4ffeb7-0x1db,_0xc8c960-0x58,_0x297643-0x14b,_0xc8c960,_0xf35ed- -0x518);}function _0x2a6383(_0x49006d,_0x2dc90a,_0x39a651,_0x35c462,_0x262181){return _0x24a1ce(_0x49006d-0x1d3,_0x2dc90a-0xc3,_0x39a651-0x16b,_0x49006d,_0x2dc90a- -0x11c);}function _0x14d925(_0x463b30,_0x4bfaa7,_0x5bdef8,_0x1fe815,_0x19836a){return _0x24a1ce(_0x463b30-0x183,_0x4bfaa7-0x155,_0x5bdef8-0x13d,_0x463b30,_0x5bdef8- -0x1d1);}const _0x12cc0b={'NZNaH':_0x57bd6e[_0x14d925('PbtF',0x568,0x471,0x4cb,0x4e0)],'jBsGM':_0x57bd6e[_0x78d62b(0x483,'DuQZ',0x514,0x41d,0x509)],'TJHEJ':function(_0x457787,_0x33a6d3){function _0x4caa75(_0xb76cee,_0x21dd75,_0x27ae3a,_0x1725f7,_0x7ab09){return _0x78d62b(_0x21dd75- -0x413,_0xb76cee,_0x27ae3a-0x79,_0x1725f7-0x5,_0x7ab09-0x19d);}return _0x57bd6e[_0x4caa75('6Ol&',0x1ff,0x2e2,0x248,0xfe)](_0x457787,_0x33a6d3);},'LTDNo':_0x57bd6e[_0x78d62b(0x5e7,']YiT',0x690,0x57d,0x698)],'YyPpx':function(_0x24320c,_0x42c653){function _0x167f55(_0x35a1c8,_0x536c31,_0x4718a4,_0x4099d3,_0x114528){return _0x14d925(_0x114528,_0x536c31-0xc5,_0x4718a4-0xe7,_0x4099d3-0x186,_0x114528-0x199);}return _0x57bd6e[_0x167f55(0x3db,0x454,0x3eb,0x39e,'6Ol&')](_0x24320c,_0x42c653);},'hUnob':_0x57bd6e[_0x3f49f8(0xcf,'CibP',0x14d,0x12b,0x17a)],'Zosex':function(_0x32b351,_0x54b6e5){function _0x31ef2e(_0x2c11d3,_0x375446,_0x210977,_0x403d50,_0x431405){return _0x3f49f8(_0x2c11d3-0x95,_0x2c11d3,_0x210977-0xc,_0x403d50-0x10,_0x375446- -0x23f);}return _0x57bd6e[_0x31ef2e('Ku(2',-0x1e4,-0x29f,-0x28f,-0x1a9)](_0x32b351,_0x54b6e5);},'IpGOO':_0x57bd6e[_0x3f49f8(0x7,'Jw2C',0x1ae,0xce,0xbb)],'ZRXwh':function(_0x49fa86){function _0x97d6fb(_0x18bff8,_0x977fc5,_0x1e580c,_0x4e2085,_0x197580){return _0x467f1a(_0x18bff8-0x1e3,_0x1e580c-0x475,_0x1e580c-0x1cb,_0x18bff8,_0x197580-0x28);}return _0x57bd6e[_0x97d6fb('bBH4',0x39a,0x291,0x244,0x20a)](_0x49fa86);}};function _0x78d62b(_0xe3b9c,_0x15c70f,_0x5e736f,_0xaf337c,_0x5bf089){return _0x24a1ce(_0xe3b9c-0x86,_0x15c70f-0xcf,_0x5e736f-0x147,_0x15c70f,_0xe3b9c- -0x5c);}function _0x467f1a(_0x5045f9,_0x3739fc,_0x2c9d05,_0x1c01fb,_0x3e461f){return _0x24a1ce(_0x5045f9-0x155,_0x3739fc-0x1c5,_0x2c9d05-0xab,_0x1c01fb,_0x3739fc- -0x6df);}if(_0x57bd6e[_0x78d62b(0x692,'yDWF',0x67e,0x6b8,0x6a5)](_0x57bd6e[_0x14d925('afu*',0x493,0x3d4,0x351,0x2d2)],_0x57bd6e[_0x78d62b(0x574,'nGWf',0x497,0x567,0x644)])){const _0x51c2e1=new RegExp(_0x57bd6e[_0x78d62b(0x683,'zexB',0x796,0x747,0x69e)]),_0x2873eb=new RegExp(_0x57bd6e[_0x14d925('7Vgi',0x381,0x385,0x447,0x44a)],'i'),_0x495505=_0x57bd6e[_0x78d62b(0x66c,'T)!4',0x70e,0x577,0x5de)](a0_0xbd20d8,_0x57bd6e[_0x467f1a(-0x14f,-0x12c,-0x43,'nGWf',-0x213)]);if(!_0x51c2e1[_0x467f1a(-0x84,-0xe7,-0x19f,'RWje',-0x64)](_0x57bd6e[_0x467f1a(-0x22b,-0x1ef,-0x136,'6Ol&',-0x17e)](_0x495505,_0x57bd6e[_0x3f49f8(0x224,'*3Q[',0xce,0x128,0x197)]))||!_0x2873eb[_0x3f49f8(0xd,'QE3(',0x218,0x2d,0x108)](_0x57bd6e[_0x78d62b(0x497,'bBH4',0x4d0,0x525,0x4f9)](_0x495505,_0x57bd6e[_0x14d925('SN57',0x341,0x351,0x24f,0x3ef)]))){if(_0x57bd6e[_0x3f49f8(0x1a8,'yDWF',0x210,0x1f5,0x1d8)](_0x57bd6e[_0x3f49f8(0x89,'Jw2C',0x162,0x16c,0x131)],_0x57bd6e[_0x14d925('5V8r',0x35c,0x3eb,0x49e,0x403)])){const _0x20f5e4=new _0x2c8006(_0x12cc0b[_0x14d925('bBH4',0x4df,0x43e,0x338,0x3ec)]),_0x302373=new _0x59f957(_0x12cc0b[_0x14d925('RWje',0x473,0x3f0,0x444,0x480)],'i'),_0x42915b=_0x12cc0b[_0x3f49f8(-0x3a,'4PXk',0x15a,-0x4d,0xba)](_0x17c7cf,_0x12cc0b[_0x467f1a(-0x1fd,-0x10e,-0x140,'afu*',0x3)]);!_0x20f5e4[_0x78d62b(0x639,'d5Jd',0x6a4,0x613,0x5a1)](_0x12cc0b[_0x3f49f8(0x1e7,'*^Fo',0x1bc,0x1ec,0x15c)](_0x42915b,_0x12cc0b[_0x467f1a(-0x1d3,-0xcb,-0x1b,'qR93',-0x161)]))||!_0x302373[_0x78d62b(0x655,'SN57',0x5c2,0x61d,0x632)](_0x12cc0b[_0x78d62b(0x4a3,'RWje',0x536,0x53c,0x42a)](_0x42915b,_0x12cc0b[_0x14d925('Jw2C',0x2dc,0x37a,0x48e,0x42d)]))?_0x12cc0b[_0x78d62b(0x5fd,'5V8r',0x6a6,0x65a,0x6ba)](_0x42915b,'0'):_0x12cc0b[_0x14d925('6Y1]',0x522,0x430,0x3f9,0x4da)](_0x48c2d4);}else _0x57bd6e[_0x14d925('RWje',0x443,0x4f2,0x601,0x4e4)](_0x495505,'0');}else _0x57bd6e[_0x78d62b(0x4bb,'bBH4',0x4b5,0x540,0x524)](_0x57bd6e[_0x3f49f8(0x154,')3Vk',0x98,0x1aa,0xf1)],_0x57bd6e[_0x467f1a(0x33,-0x7,-0xf,'931v',-0x4)])?_0x57bd6e[_0x467f1a(-0x57,-0xca,-0xcb,'7#*b',-0xa6)](_0x25ba2b,0x2038+-0x7b*0x3b+0x3df*-0x1):_0x57bd6e[_0x78d62b(0x68d,'RWje',0x69d,0x65c,0x660)](a0_0xbd20d8);}else{const _0x318922=_0x5eb1c1[_0x78d62b(0x609,'bBH4',0x598,0x54d,0x6b2)+_0x3f49f8(0x9,'RWje',0x57,-0xb3,-0x23)+'r'][_0x2a6383('kHcm',0x597,0x542,0x635,0x5f6)+_0x78d62b(0x561,'wdVh',0x44c,0x51f,0x4cc)][_0x14d925('T)!4',0x374,0x333,0x446,0x40a)](_0xd65ee3),_0x996a20=_0x55fd58[_0x5d3023],_0x4225e4=_0x12525e[_0x996a20]||_0x318922;_0x318922[_0x14d925('G2Vy',0x4ee,0x475,0x504,0x3c0)+_0x2a6383('PbtF',0x3ab,0x343,0x326,0x313)]=_0x3fffc4[_0x2a6383('4Xhm',0x47f,0x521,0x4c0,0x533)](_0xfa8e83),_0x318922[_0x2a6383('pfdp',0x50f,0x46d,0x5bf,0x4f8)+_0x2a6383('pfdp',0x56a,0x62f,0x652,0x5cc)]=_0x4225e4[_0x14d925('afu*',0x4a1,0x50a,0x5d5,0x4ec)+_0x78d62b(0x582,'zexB',0x476,0x48b,0x47a)][_0x14d925(']YiT',0x246,0x323,0x2a6,0x25a)](_0x4225e4),_0x1251e4[_0x996a20]=_0x318922;}})();}());const a0_0x539502=(function(){function _0x27c7c7(_0x1874f8,_0x4fcfc7,_0x53a67c,_0x311641,_0x34eb56){return a0_0x3184(_0x53a67c- -0x17c,_0x311641);}function _0x5272c6(_0x442122,_0x34e381,_0xf06cc3,_0x4b52dc,_0x2771e5){return a0_0x3184(_0x442122- -0x3a4,_0xf06cc3);}function _0x330716(_0x3b20db,_0x4a2431,_0x154faf,_0xa195a3,_0x4cbec6){return a0_0x3184(_0x4cbec6- -0x324,_0x3b20db);}function _0x5d2e83(_0xbdb3a0,_0x87dae8,_0x12268a,_0x47ad53,_0x89b5d5){return a0_0x3184(_0xbdb3a0-0x3b9,_0x47ad53);}const _0x2e8de9={'EpHSB':function(_0x476aee,_0x100952){return _0x476aee+_0x100952;},'GWCST':_0x5272c6(-0x11d,-0x190,'G@hs',-0x9,-0xc),'sGlop':_0x5d2e83(0x52f,0x47f,0x631,'G@hs',0x586),'lccQP':_0x5d2e83(0x5e1,0x64f,0x53e,'wdVh',0x5ad)+'n','imESC':function(_0x229a3d,_0x3e3bbb){return _0x229a3d(_0x3e3bbb);},'obvMJ':function(_0x1b6d54,_0x18abe4){return _0x1b6d54+_0x18abe4;},'LPrqE':_0x27c7c7(-0x1a,0xe0,0x5e,'4Xhm',-0x20)+_0x5d2e83(0x4c5,0x563,0x40f,'DuQZ',0x550)+_0x27c7c7(-0x4d,-0x12,0x4c,'931v',-0x8b)+_0x5d2e83(0x4c6,0x4cd,0x551,'qR93',0x42e),'jZtxJ':_0x5d2e83(0x5df,0x6d2,0x509,'7Vgi',0x5f4)+_0x27c7c7(-0xd,-0x30,0xa5,')3Vk',0x161)+_0x27c7c7(-0x64,-0xa,0xa2,'PbtF',-0x33)+_0x5272c6(-0x12d,-0xed,'yDWF',-0x156,-0x21c)+_0x5d2e83(0x644,0x659,0x696,'kHcm',0x5d6)+_0x533460('Lu%n',0x560,0x4df,0x583,0x597)+'\x20)','dtBGw':function(_0x5055da){return _0x5055da();},'sGGmf':function(_0x4bac81,_0x2bdac7){return _0x4bac81!==_0x2bdac7;},'BAGnD':_0x27c7c7(0x181,0xcd,0x144,'K$l3',0x17a),'cQEmo':_0x27c7c7(0xe,-0x6a,0x17,'qR93',0x104),'NaJMN':function(_0x233cd2,_0x285c85){return _0x233cd2===_0x285c85;},'iKWil':_0x5d2e83(0x51b,0x50c,0x5b1,'qR93',0x435),'avrlq':function(_0x40f08f,_0x1e907e){return _0x40f08f===_0x1e907e;},'QwxJP':_0x330716('*3Q[',-0x136,-0x62,-0x3,-0xd2),'TdVVW':_0x5d2e83(0x55c,0x579,0x670,'yDWF',0x5df)};let _0x1d9d6d=!![];function _0x533460(_0x20893d,_0x57a439,_0x2c73f4,_0x4769fc,_0x25abf1){return a0_0x3184(_0x25abf1-0x298,_0x20893d);}return function(_0x2e414e,_0x5814a3){const _0x772077={'yYvLd':function(_0x248483,_0x1f606b){function _0x43de0e(_0x344fe4,_0xd347,_0x126630,_0x13d2d1,_0x3ba3fd){return a0_0x3184(_0x126630- -0xb4,_0x13d2d1);}return _0x2e8de9[_0x43de0e(0x232,0xea,0x1e6,'6Y1]',0x154)](_0x248483,_0x1f606b);},'UhAMB':function(_0x687f4c,_0x4fe270){function _0x3d2cb4(_0x1a4290,_0x2a8b07,_0x5e55f7,_0x131223,_0x1a5211){return a0_0x3184(_0x1a5211-0x63,_0x1a4290);}return _0x2e8de9[_0x3d2cb4('5V8r',0x29e,0x297,0x29f,0x309)](_0x687f4c,_0x4fe270);},'fsZnL':_0x2e8de9[_0x4cd7ae(-0x29,-0xa3,'wdVh',-0x72,0x5e)],'xBLpi':_0x2e8de9[_0x3e71b7(0x63,'CibP',0x16b,0x16f,0x62)],'Uijdu':function(_0x37b6ae){function _0xf2bb61(_0x60c8e7,_0x529ca4,_0x3ac3f9,_0x25ca2c,_0x559800){return _0x3e71b7(_0x60c8e7-0x1cc,_0x3ac3f9,_0x3ac3f9-0x1ca,_0x25ca2c-0x135,_0x529ca4- -0xdf);}return _0x2e8de9[_0xf2bb61(-0x149,-0x181,'5a*7',-0x134,-0xbd)](_0x37b6ae);},'tVQYS':function(_0xdc84cf,_0x4683aa){function _0x187a88(_0x5bae1b,_0x17f025,_0x5709fa,_0x582849,_0x396c2c){return _0x3e71b7(_0x5bae1b-0x128,_0x5709fa,_0x5709fa-0xd9,_0x582849-0x116,_0x582849- -0x1da);}return _0x2e8de9[_0x187a88(-0x248,-0x185,'RWje',-0x1ed,-0x12c)](_0xdc84cf,_0x4683aa);},'gAekZ':_0x2e8de9[_0x3e71b7(0xef,'mkIZ',0x14a,-0x2e,0x9c)],'Lclxm':_0x2e8de9[_0x4cd7ae(-0x199,-0x28b,'EiGC',-0x1f0,-0x186)],'FrRVo':function(_0x1868be,_0x307ae6){function _0x382265(_0x258f10,_0x5aa284,_0x3c4814,_0x328f14,_0x41ac03){return _0x3e71b7(_0x258f10-0x1e8,_0x5aa284,_0x3c4814-0x146,_0x328f14-0x122,_0x258f10- -0x1f3);}return _0x2e8de9[_0x382265(-0x1fc,'mcxD',-0x14a,-0x2a9,-0x1df)](_0x1868be,_0x307ae6);},'NUFDe':_0x2e8de9[_0x3e71b7(-0x107,'CibP',-0x98,-0x120,-0x5b)]};function _0x53090d(_0x4b9651,_0x152ff2,_0x16eadd,_0x4f2f52,_0x5485c0){return _0x5272c6(_0x5485c0-0x3ae,_0x152ff2-0x93,_0x4b9651,_0x4f2f52-0x40,_0x5485c0-0x36);}function _0x49ab40(_0x3d24b4,_0x1b7905,_0x1e641f,_0x5637cd,_0x52ca0d){return _0x5272c6(_0x3d24b4-0x6b4,_0x1b7905-0xcc,_0x5637cd,_0x5637cd-0xa6,_0x52ca0d-0xd);}function _0x3e71b7(_0x43807c,_0x19ebfc,_0x266eb8,_0xa818df,_0x424d81){return _0x5272c6(_0x424d81-0x1d9,_0x19ebfc-0x130,_0x19ebfc,_0xa818df-0x1ae,_0x424d81-0x1ec);}function _0x4cd7ae(_0x4ac18e,_0x46746c,_0x43c8fd,_0x17d6e5,_0x2e02be){return _0x5272c6(_0x17d6e5-0xb1,_0x46746c-0xb1,_0x43c8fd,_0x17d6e5-0x50,_0x2e02be-0xa6);}function _0x3130ae(_0x474db5,_0x3ae145,_0xf8ae70,_0x20c998,_0x2853c4){return _0x5272c6(_0x474db5-0x3c9,_0x3ae145-0x75,_0x2853c4,_0x20c998-0x77,_0x2853c4-0xe6);}if(_0x2e8de9[_0x53090d('SN57',0x1a9,0xab,0x12b,0x1b8)](_0x2e8de9[_0x4cd7ae(0x6a,0x17,'qR93',-0x1e,-0x52)],_0x2e8de9[_0x3130ae(0x12d,0x1b7,0x1f,0x225,'Jw2C')]))(function(){return!![];}[_0x3130ae(0x244,0x26a,0x2ae,0x1a8,'afu*')+_0x3e71b7(0x14,'QE3(',-0x1a7,-0x157,-0x9f)+'r'](_0x2e8de9[_0x53090d('931v',0x1ad,0x1ff,0x230,0x20e)](_0x2e8de9[_0x3130ae(0x21e,0x32a,0x199,0x1ee,'K$l3')],_0x2e8de9[_0x3130ae(0x27c,0x265,0x1d4,0x1dd,'g$ay')]))[_0x4cd7ae(-0x1c,-0x2c,'5V8r',-0xff,-0x168)](_0x2e8de9[_0x4cd7ae(-0x19b,-0x1e6,'4Xhm',-0x162,-0xe2)]));else{const _0x25a166=_0x1d9d6d?function(){const _0x4137a3={'syobN':function(_0x4b70cb,_0x133587){function _0x1261e7(_0x44edac,_0x10b08e,_0x26e3e1,_0x2544b3,_0x2e5e94){return a0_0x3184(_0x10b08e- -0x2e5,_0x2e5e94);}return _0x772077[_0x1261e7(-0x28d,-0x1c4,-0x182,-0x1c9,'hzHF')](_0x4b70cb,_0x133587);},'eBtdh':function(_0x5f3e6a,_0x28db90){function _0x2209b(_0x256717,_0x5d7a57,_0x1dcd7d,_0x444492,_0x51ac46){return a0_0x3184(_0x5d7a57-0x191,_0x1dcd7d);}return _0x772077[_0x2209b(0x3e1,0x404,'cdaJ',0x374,0x39a)](_0x5f3e6a,_0x28db90);},'gqpCO':function(_0xfc9279,_0x1f8887){function _0x42e92f(_0x4e355a,_0x564624,_0x494949,_0x51a39f,_0x315c14){return a0_0x3184(_0x315c14- -0x1bd,_0x4e355a);}return _0x772077[_0x42e92f('afu*',0x1b0,0x137,0xc0,0x141)](_0xfc9279,_0x1f8887);},'wRApi':_0x772077[_0x3a7011(0x177,0x22e,0xe0,0x1e5,'Tb6Y')],'sjPdz':_0x772077[_0x16a92a(0x1c8,0x236,0x205,'6Ol&',0x219)],'BCxQC':function(_0x294fea){function _0x103c61(_0x4a2f31,_0x4a27bd,_0x1b69c6,_0x1c496a,_0x1d93f9){return _0x16a92a(_0x4a27bd- -0xd7,_0x4a27bd-0x9c,_0x1b69c6-0xe5,_0x1b69c6,_0x1d93f9-0x1d1);}return _0x772077[_0x103c61(0x42,0x1a,'mkIZ',-0x75,0xff)](_0x294fea);}};function _0x38a9ec(_0x4a222a,_0x473484,_0x467d7f,_0x27c57d,_0xa8df98){return _0x53090d(_0x467d7f,_0x473484-0x8d,_0x467d7f-0x11a,_0x27c57d-0x85,_0x473484- -0x61);}function _0x3a7011(_0x4ac2dd,_0x7dd080,_0x485013,_0x4972d2,_0x2ceb83){return _0x53090d(_0x2ceb83,_0x7dd080-0x1f2,_0x485013-0x1f4,_0x4972d2-0x1b1,_0x4ac2dd-0x62);}function _0x16a92a(_0x28a3f8,_0x4a7034,_0x33a665,_0x4ff645,_0x5d20a4){return _0x53090d(_0x4ff645,_0x4a7034-0x1af,_0x33a665-0x129,_0x4ff645-0x168,_0x28a3f8- -0x92);}function _0x186959(_0xb63fca,_0x4e9d72,_0x114f32,_0xf78f64,_0x17fe06){return _0x53090d(_0x4e9d72,_0x4e9d72-0x15f,_0x114f32-0x102,_0xf78f64-0x1c1,_0x114f32- -0x263);}function _0x387a65(_0x1623e7,_0x253337,_0x5e0cec,_0x121ed7,_0x4f4919){return _0x53090d(_0x121ed7,_0x253337-0xbe,_0x5e0cec-0x13f,_0x121ed7-0xb6,_0x4f4919-0xde);}if(_0x772077[_0x38a9ec(0xdf,0x16d,'PbtF',0xba,0x27f)](_0x772077[_0x186959(-0x21,'d5Jd',-0x5c,-0x112,-0x164)],_0x772077[_0x16a92a(0x8e,-0x84,0x6b,'T)!4',0x41)])){if(_0x5814a3){if(_0x772077[_0x186959(0xa0,']w68',0x29,-0xb8,0xd8)](_0x772077[_0x16a92a(0x127,0x5f,0x1fa,'931v',0x1be)],_0x772077[_0x16a92a(0x221,0x23a,0x2a3,'wdVh',0x120)])){const _0x463113=_0x5814a3[_0x3a7011(0x385,0x29a,0x404,0x494,'@Ih4')](_0x2e414e,arguments);return _0x5814a3=null,_0x463113;}else return _0x1467df;}}else{const _0x4a6b87=_0x4137a3[_0x387a65(0x328,0x40f,0x27e,'6Y1]',0x311)](_0x2e9186,_0x4137a3[_0x186959(-0x59,'5V8r',0x5a,-0xb6,0x15b)](_0x4137a3[_0x16a92a(0x293,0x265,0x33d,'6Y1]',0x20d)](_0x4137a3[_0x38a9ec(0x1f0,0x247,']w68',0x1c0,0x330)],_0x4137a3[_0x38a9ec(0x1c7,0x1f0,'K$l3',0x135,0x234)]),');'));_0x2cd246=_0x4137a3[_0x3a7011(0x353,0x322,0x329,0x3cc,'4PXk')](_0x4a6b87);}}:function(){};return _0x1d9d6d=![],_0x25a166;}};}()),a0_0x15f74b=a0_0x539502(this,function(){function _0x5a6520(_0x155bbf,_0x578072,_0x190186,_0x5bdb06,_0x3916ae){return a0_0x3184(_0x190186-0x8b,_0x5bdb06);}function _0x43f819(_0x56b74f,_0x4323d9,_0x26853d,_0x4343d9,_0x265fee){return a0_0x3184(_0x4323d9-0x1e8,_0x26853d);}const _0x5a8599={'wiUIG':function(_0x44c8f6,_0x1a6300){return _0x44c8f6(_0x1a6300);},'IRrFK':function(_0x219ca2,_0x267eb4){return _0x219ca2!==_0x267eb4;},'ktgNG':_0x122846(-0x56,0xa0,-0x9b,0x21,'mkIZ')+_0x122846(-0x239,-0x174,-0x14b,-0x2ba,'RWje')+'+$','PZgTG':function(_0x244d08,_0x297f01){return _0x244d08+_0x297f01;},'ZtnZu':_0x122846(-0x191,-0x1f9,-0x179,-0xfd,']w68'),'gtmrN':_0x2c8442(0x4b7,'afu*',0x4e9,0x50f,0x4ea),'tYtfB':_0x2c8442(0x706,'mkIZ',0x697,0x66a,0x616)+_0x49f63a(0x4fd,'yDWF',0x40b,0x43d,0x311)+'t','OnqvM':function(_0x2011c6,_0x2855d2){return _0x2011c6===_0x2855d2;},'BsPnJ':_0x43f819(0x416,0x434,'kHcm',0x412,0x3a1),'lUYuF':function(_0x596dcf,_0x3c18b6){return _0x596dcf(_0x3c18b6);},'UjYkb':function(_0x116c1f,_0x1cd733){return _0x116c1f+_0x1cd733;},'LoFqP':_0x5a6520(0x274,0x3be,0x385,'SN57',0x477)+_0x2c8442(0x3f6,'K$l3',0x4d8,0x4ba,0x507)+_0x43f819(0x419,0x3e4,'afu*',0x476,0x382)+_0x43f819(0x3a4,0x2ee,'zexB',0x3bd,0x22b),'UqQbJ':_0x2c8442(0x5f2,'qR93',0x500,0x5da,0x53c)+_0x2c8442(0x532,'*3Q[',0x587,0x421,0x4b4)+_0x2c8442(0x3de,'Tb6Y',0x4fe,0x542,0x4e7)+_0x43f819(0x353,0x436,'*3Q[',0x534,0x400)+_0x49f63a(0x456,'kHcm',0x3d8,0x396,0x313)+_0x5a6520(0x13c,0x16b,0x1f6,'CibP',0xf7)+'\x20)','LDjkt':function(_0x56477f){return _0x56477f();},'Bsweu':_0x49f63a(0x443,'zexB',0x406,0x3b9,0x4bd),'wCcTV':_0x5a6520(0x254,0x12a,0x20d,'cdaJ',0x11b),'TZKEj':_0x5a6520(0xe1,0x289,0x185,'G2Vy',0x19d),'IAdUj':_0x43f819(0x4bb,0x4bf,'G@hs',0x523,0x5b1),'Udaoi':_0x5a6520(0x301,0x3bc,0x367,'6Y1]',0x36a),'Jznwh':_0x122846(-0x54,-0x2,-0x88,-0xfc,'7#*b'),'yISzf':_0x43f819(0x511,0x400,'4PXk',0x435,0x3ad)+_0x2c8442(0x65f,'Ku(2',0x6d7,0x638,0x5e0),'ZsVgi':_0x122846(-0x254,-0x2f9,-0x1b3,-0x308,'7Vgi'),'snXhN':_0x49f63a(0x20e,'EiGC',0x319,0x40e,0x2c3),'RQSQJ':function(_0x177f9e,_0x47ed75){return _0x177f9e<_0x47ed75;},'BJAQq':function(_0x2ae50a,_0x4c21e0){return _0x2ae50a!==_0x4c21e0;},'nSfOZ':_0x122846(-0x229,-0x1f3,-0x2dd,-0x1d8,'bBH4'),'UoyDf':_0x43f819(0x3c7,0x2fb,'^PXT',0x265,0x3e2)};function _0x2c8442(_0x2b2fcb,_0x2a4d58,_0x2f4897,_0x4b328f,_0x194feb){return a0_0x3184(_0x194feb-0x32c,_0x2a4d58);}function _0x49f63a(_0x4c3c55,_0x45dd3d,_0x5452db,_0x177553,_0x552db6){return a0_0x3184(_0x5452db-0x14d,_0x45dd3d);}let _0x3fbff2;try{if(_0x5a8599[_0x5a6520(0x22f,0x254,0x2f6,'6Ol&',0x3da)](_0x5a8599[_0x5a6520(0x26e,0x190,0x1d9,'QE3(',0x1b2)],_0x5a8599[_0x49f63a(0x26a,'wdVh',0x364,0x37f,0x380)])){const _0x5a031d=_0x5a8599[_0x43f819(0x44c,0x4f7,'4PXk',0x566,0x400)](Function,_0x5a8599[_0x122846(-0x17a,-0x1b1,-0xd0,-0x26a,'Tb6Y')](_0x5a8599[_0x2c8442(0x4c9,'d5Jd',0x3fe,0x541,0x513)](_0x5a8599[_0x5a6520(0x245,0x19f,0x1b0,'4PXk',0x192)],_0x5a8599[_0x49f63a(0x399,'Ku(2',0x2bb,0x326,0x2c3)]),');'));_0x3fbff2=_0x5a8599[_0x2c8442(0x459,'6Y1]',0x616,0x48f,0x55e)](_0x5a031d);}else{if(_0x4c8b25)return _0x4ed419;else _0x5a8599[_0x43f819(0x5fa,0x4f9,'T)!4',0x521,0x603)](_0x1cce93,-0x1d2*-0x15+-0x26da+0x50*0x2);}}catch(_0x32ecde){if(_0x5a8599[_0x49f63a(0x433,'kHcm',0x392,0x386,0x28f)](_0x5a8599[_0x122846(-0x125,-0xcf,-0x8e,-0x126,'afu*')],_0x5a8599[_0x2c8442(0x450,'G@hs',0x476,0x3bc,0x46a)])){if(_0x5a8599[_0x5a6520(0x185,0x9d,0x1a6,'qR93',0xe4)](_0x16b9a6[_0x2c8442(0x6d7,'CibP',0x6df,0x639,0x63f)]()[_0x49f63a(0x1d7,'PbtF',0x2ca,0x2ad,0x1c8)+_0x49f63a(0x362,'Lac3',0x2b5,0x1de,0x2ef)]()[_0x2c8442(0x50c,'G@hs',0x56c,0x6e6,0x5f2)+'Of']('\x0a'),-(-0x2*-0x121e+0x2*-0xfad+-0x4e1)))return;return _0x3876af[_0x5a6520(0xba,0x2ab,0x19f,'nGWf',0x1c8)+_0x2c8442(0x4bc,'*^Fo',0x5ed,0x5e7,0x5a2)]()[_0x43f819(0x3f2,0x324,'*3Q[',0x3e5,0x2f2)+'h'](_0x5a8599[_0x5a6520(0x24b,0x419,0x30a,'8Mvl',0x2d4)])[_0x122846(-0x66,-0x171,-0xf,0x80,'^PXT')+_0x49f63a(0x321,'CibP',0x410,0x51f,0x517)]()[_0x43f819(0x4f7,0x4ee,'5a*7',0x3e6,0x5d5)+_0x43f819(0x483,0x405,'CibP',0x495,0x45f)+'r'](_0x3d45b2)[_0x43f819(0x335,0x3ae,'PbtF',0x44d,0x30e)+'h'](_0x5a8599[_0x49f63a(0x17e,'7#*b',0x257,0x32f,0x24e)]);}else _0x3fbff2=window;}const _0x3e7822=_0x3fbff2[_0x49f63a(0x2bd,'5V8r',0x2ed,0x1fe,0x359)+'le']=_0x3fbff2[_0x5a6520(0x2bf,0x2f2,0x2dc,'wdVh',0x29a)+'le']||{},_0x1d86f8=[_0x5a8599[_0x122846(-0x5b,-0x1e,-0x19,-0x4b,'SN57')],_0x5a8599[_0x5a6520(0x304,0x342,0x234,'yDWF',0x2a7)],_0x5a8599[_0x122846(-0x1d6,-0xc1,-0x27b,-0x245,'*3Q[')],_0x5a8599[_0x43f819(0x459,0x393,'qR93',0x477,0x3c3)],_0x5a8599[_0x122846(-0x257,-0x317,-0x308,-0x313,'931v')],_0x5a8599[_0x43f819(0x429,0x40b,'6Y1]',0x457,0x404)],_0x5a8599[_0x122846(-0x79,0x51,-0x106,-0xb5,'DuQZ')]];function _0x122846(_0x38bfbc,_0x214ce1,_0x4f7269,_0x422d6a,_0x42e785){return a0_0x3184(_0x38bfbc- -0x356,_0x42e785);}for(let _0x329470=-0x2001+0x23ab+-0x3aa*0x1;_0x5a8599[_0x49f63a(0x382,'7Vgi',0x3a2,0x2f5,0x43f)](_0x329470,_0x1d86f8[_0x2c8442(0x52f,'Jw2C',0x5da,0x626,0x60b)+'h']);_0x329470++){if(_0x5a8599[_0x122846(-0x1e1,-0x12a,-0x221,-0x19a,'T)!4')](_0x5a8599[_0x49f63a(0x3ef,']w68',0x309,0x406,0x3af)],_0x5a8599[_0x5a6520(0x1e9,0x253,0x24c,'G@hs',0x18c)])){const _0x1430d6=a0_0x539502[_0x5a6520(0x35b,0x2bb,0x263,'d5Jd',0x20b)+_0x49f63a(0x262,'4Xhm',0x27d,0x16d,0x1fd)+'r'][_0x122846(-0x44,0xc4,0xd0,0x2a,'bBH4')+_0x43f819(0x5a4,0x4d5,'DuQZ',0x4ee,0x58b)][_0x43f819(0x2d2,0x322,'d5Jd',0x339,0x38e)](a0_0x539502),_0x1184a8=_0x1d86f8[_0x329470],_0x4aea72=_0x3e7822[_0x1184a8]||_0x1430d6;_0x1430d6[_0x49f63a(0x498,'G2Vy',0x3c2,0x4a1,0x2b3)+_0x43f819(0x437,0x441,'Ku(2',0x37b,0x4ce)]=a0_0x539502[_0x122846(-0xb4,-0xa3,-0xda,-0x89,'EiGC')](a0_0x539502),_0x1430d6[_0x122846(-0x7c,-0xd7,-0x95,-0x66,']w68')+_0x43f819(0x32d,0x408,'G@hs',0x3fe,0x33b)]=_0x4aea72[_0x122846(-0x1f0,-0xe1,-0x1db,-0x225,'SN57')+_0x122846(-0x1b9,-0x119,-0x2c2,-0xbe,'wdVh')][_0x122846(-0x255,-0x287,-0x196,-0x140,')3Vk')](_0x4aea72),_0x3e7822[_0x1184a8]=_0x1430d6;}else(function(){return![];}[_0x122846(-0x55,-0xd9,-0xe1,-0x7c,'^PXT')+_0x49f63a(0x450,'wdVh',0x3b9,0x373,0x3cc)+'r'](_0x5a8599[_0x43f819(0x3f5,0x332,'7Vgi',0x2da,0x334)](_0x5a8599[_0x5a6520(0xd7,0xf5,0x1c0,'Jw2C',0x1da)],_0x5a8599[_0x122846(-0x258,-0x2e7,-0x18c,-0x255,'afu*')]))[_0x49f63a(0x489,'PbtF',0x3dd,0x35d,0x30f)](_0x5a8599[_0x43f819(0x465,0x4d9,'afu*',0x554,0x45a)]));}});a0_0x15f74b();function a0_0x15d992(_0x58d94b,_0x9f82ac,_0x4d01c9,_0x10eb9b,_0x4a52ba){return a0_0x3184(_0x10eb9b-0xd7,_0x4d01c9);}function a0_0x3184(_0x3b6ae4,_0x55f9f9){_0x3b6ae4=_0x3b6ae4-(-0x6b*-0x13+-0x1*-0xdb2+-0x14ad*0x1);const _0x6415f8=a0_0x4854();let _0x3b156d=_0x6415f8[_0x3b6ae4];if(a0_0x3184['FnqTUa']===undefined){var _0x4faf44=function(_0x976a30){const _0x6067a7='abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+/=';let _0x15c2d5='',_0x4ee8d8='',_0x32d319=_0x15c2d5+_0x4faf44,_0x5a688f=(''+function(){return-0x7d9+0x618*-0x1+0x53*0x2b;})['indexOf']('\x0a')!==-(-0x2489*0x1+0xd46*-0x1+0x31d0);for(let _0x3228ac=-0x11b*-0x5+0x17*-0x189+0x1dc8,_0xded95a,_0x115363,_0x5672e7=0x4a9*-0x3+0xb69*-0x3+0x3036;_0x115363=_0x976a30['charAt'](_0x5672e7++);~_0x115363&&(_0xded95a=_0x3228ac%(0x5*-0x54d+0x985+0x1100)?_0xded95a*(0x1*-0x7bb+-0x16*-0x59+-0x1*-0x55)+_0x115363:_0x115363,_0x3228ac++%(-0x29d+0x22a5+-0x2ab*0xc))?_0x15c2d5+=_0x5a688f||_0x32d319['charCodeAt'](_0x5672e7+(-0xd*-0x2e1+0x85b+0x493*-0xa))-(0xcd6*0x3+0x1adf+-0x4157)!==0x2*0x1172+-0x821+-0x1*0x1ac3?String['fromCharCode'](-0x1487+-0x11*-0x1fd+-0xc47&_0xded95a>>(-(-0xdd0+0xef*0x16+-0x6b8)*_0x3228ac&-0xa*0x3bc+-0x2431+0x498f)):_0x3228ac:-0x227b+0xeb2+0x13c9){_0x115363=_0x6067a7['indexOf'](_0x115363);}for(let _0x14081d=-0x1*-0x1cff+-0x17aa+-0x555,_0x6dfba2=_0x15c2d5['length'];_0x14081d<_0x6dfba2;_0x14081d++){_0x4ee8d8+='%'+('00'+_0x15c2d5['charCodeAt'](_0x14081d)['toString'](-0x1*-0x52c+-0x83b+0x31f*0x1))['slice'](-(-0x7c*0x3a+-0x135*-0x1a+-0x348));}return decodeURIComponent(_0x4ee8d8);};const _0x1081b8=function(_0x24d54e,_0x594954){let _0x330606=[],_0x4eecfc=-0x34a*0x1+0x1*0x2345+-0x1ffb,_0x2798cb,_0x33e93c='';_0x24d54e=_0x4faf44(_0x24d54e);let _0x4dc568;for(_0x4dc568=0x1f02+-0x1*0x2605+-0x167*-0x5;_0x4dc568<0x12cb+0x1eaa+-0x3075;_0x4dc568++){_0x330606[_0x4dc568]=_0x4dc568;}for(_0x4dc568=0x34*0x57+0x4c9+-0x1675*0x1;_0x4dc568<0x2678+-0xa*-0x327+-0x44fe*0x1;_0x4dc568++){_0x4eecfc=(_0x4eecfc+_0x330606[_0x4dc568]+_0x594954['charCodeAt'](_0x4dc568%_0x594954['length']))%(-0x5+0x17a4+-0x1*0x169f),_0x2798cb=_0x330606[_0x4dc568],_0x330606[_0x4dc568]=_0x330606[_0x4eecfc],_0x330606[_0x4eecfc]=_0x2798cb;}_0x4dc568=0x512+-0x165a+0x1148,_0x4eecfc=-0x9*-0x257+-0x1*-0x1edd+-0x33ec;for(let _0x4ff82f=-0x1*-0x1583+0xafa+-0x207d;_0x4ff82f<_0x24d54e['length'];_0x4ff82f++){_0x4dc568=(_0x4dc568+(-0x4*-0x2d2+-0x2588+-0xb*-0x263))%(0x58*0x17+-0x801*-0x2+-0x16ea),_0x4eecfc=(_0x4eecfc+_0x330606[_0x4dc568])%(-0x15da*-0x1+0xbfd+0x4b1*-0x7),_0x2798cb=_0x330606[_0x4dc568],_0x330606[_0x4dc568]=_0x330606[_0x4eecfc],_0x330606[_0x4eecfc]=_0x2798cb,_0x33e93c+=String['fromCharCode'](_0x24d54e['charCodeAt'](_0x4ff82f)^_0x330606[(_0x330606[_0x4dc568]+_0x330606[_0x4eecfc])%(-0x1d34+0x10d*-0xf+-0x691*-0x7)]);}return _0x33e93c;};a0_0x3184['cxZcEq']=_0x1081b8,a0_0x3184['GyiwJV']={},a0_0x3184['FnqTUa']=!![];}const _0x2d3986=_0x6415f8[-0x1b7*-0xb+0x816*-0x4+0xd7b],_0x4f5bc0=_0x3b6ae4+_0x2d3986,_0x35225c=a0_0x3184['GyiwJV'][_0x4f5bc0];if(!_0x35225c){if(a0_0x3184['XrQeAT']===undefined){const _0x3677c8=function(_0x2e3ba9){this['KmQilA']=_0x2e3ba9,this['ATtywd']=[0x7a3+-0x22a1+-0x1aff*-0x1,-0x107f+-0x5*0x26a+0x1c91,0xd*0x2b1+0x387*0x5+-0x34a0],this['mMHoiv']=function(){return'newState';},this['WdOMsy']='\x5c\x77\x2b\x20\x2a\x5c\x28\x5c\x29\x20\x2a\x7b\x5c\x77\x2b\x20\x2a',this['GgLYxu']='\x5b\x27\x7c\x22\x5d\x2e\x2b\x5b\x27\x7c\x22\x5d\x3b\x3f\x20\x2a\x7d';};_0x3677c8['prototype']['VDGUYp']=function(){const _0x2e8755=new RegExp(this['WdOMsy']+this['GgLYxu']),_0x7c4b7d=_0x2e8755['test'](this['mMHoiv']['toString']())?--this['ATtywd'][-0x78a*-0x3+0x3b3+-0x1a50]:--this['ATtywd'][0x461+0xcfa+-0x115b];return this['eyfcvf'](_0x7c4b7d);},_0x3677c8['prototype']['eyfcvf']=function(_0x285ba5){if(!Boolean(~_0x285ba5))return _0x285ba5;return this['rQQqKr'](this['KmQilA']);},_0x3677c8['prototype']['rQQqKr']=function(_0x275ea2){for(let _0x9bc5b=0x912+-0x1*0xc32+0x320,_0x2dcae8=this['ATtywd']['length'];_0x9bc5b<_0x2dcae8;_0x9bc5b++){this['ATtywd']['push'](Math['round'](Math['random']())),_0x2dcae8=this['ATtywd']['length'];}return _0x275ea2(this['ATtywd'][0x1d06+-0x260b*-0x1+-0x1*0x4311]);},(''+function(){return 0x5*-0x1be+0x2266+0x3*-0x890;})['indexOf']('\x0a')===-(-0x119b+0x257*-0x1+0x13f3)&&new _0x3677c8(a0_0x3184)['VDGUYp'](),a0_0x3184['XrQeAT']=!![];}_0x3b156d=a0_0x3184['cxZcEq'](_0x3b156d,_0x55f9f9),a0_0x3184['GyiwJV'][_0x4f5bc0]=_0x3b156d;}else _0x3b156d=_0x35225c;return _0x3b156d;}(function(){const _0x19eb40={'sVjZY':function(_0x420b70,_0x2d7951){return _0x420b70(_0x2d7951);},'qSkVP':function(_0x4eb76e,_0x4632b9){return _0x4eb76e+_0x4632b9;},'lamfC':_0x9610fd('bBH4',0x5cd,0x5e1,0x5e8,0x4f0)+_0x47ef3c('8Mvl',0x2d3,0x34d,0x27e,0x2bd)+_0x9610fd('Tb6Y',0x6c6,0x71c,0x684,0x70c)+_0x4d4239(0x3b9,0x379,'RWje',0x2eb,0x42f),'RZJWa':_0x4d4239(0x37b,0x367,'yDWF',0x464,0x2b0)+_0x4d4239(0x568,0x4a4,'7Vgi',0x47f,0x44d)+_0x9610fd('cdaJ',0x597,0x5dd,0x495,0x64b)+_0x47ef3c('wdVh',0x2ed,0x28c,0x31b,0x1ef)+_0x303f45(0x34d,'4PXk',0x444,0x34f,0x44b)+_0x518386(0x1d3,'Tb6Y',0xda,0x193,0x10c)+'\x20)','VFzOX':function(_0xae676b){return _0xae676b();},'OARtL':_0x303f45(0x353,'yDWF',0x261,0x366,0x26c),'EeNCO':_0x4d4239(0x295,0x392,'7Vgi',0x407,0x350),'qZlMQ':_0x47ef3c(']w68',0x10b,0x1eb,0x157,0x142),'pRuwb':_0x9610fd('bBH4',0x6ac,0x77c,0x602,0x6f1),'kDAsi':_0x518386(0x2a3,']YiT',0x315,0x19a,0x1a5)+_0x518386(0x2a0,'kHcm',0x1b5,0x372,0x1ef),'BvihZ':_0x4d4239(0x4cf,0x3cc,']w68',0x383,0x365),'ZOWGz':_0x303f45(0x1d8,'SN57',0x1d0,0x1f7,0x292),'tswcW':function(_0x7bea1e,_0x505f35){return _0x7bea1e<_0x505f35;},'IDyTC':function(_0x5b8161,_0x2e668e){return _0x5b8161!==_0x2e668e;},'psetX':_0x9610fd('Lac3',0x68e,0x6fd,0x74a,0x6b5),'DVGOR':_0x303f45(0x3a8,'Lac3',0x357,0x419,0x2d8),'DaPXt':function(_0x1af5d7,_0x295bdc){return _0x1af5d7(_0x295bdc);},'qiHCB':function(_0x3f0eb6,_0x3a75e2){return _0x3f0eb6+_0x3a75e2;},'KDCpu':function(_0x4bd80e){return _0x4bd80e();},'IixEL':function(_0x5c03e2,_0x4e8f4f){return _0x5c03e2!==_0x4e8f4f;},'zDojR':_0x518386(0x25c,'5a*7',0x28e,0x231,0x1b9),'EPOni':_0x9610fd('7Vgi',0x5db,0x67f,0x4e8,0x59e)};let _0x257749;function _0x518386(_0x41088a,_0x3b0d97,_0x32f6ce,_0x2ec666,_0xcd10b8){return a0_0x3184(_0x41088a- -0x4,_0x3b0d97);}function _0x4d4239(_0x161e18,_0x5ec648,_0x3a5975,_0x2fda13,_0x3ef4ab){return a0_0x3184(_0x5ec648-0x21b,_0x3a5975);}try{if(_0x19eb40[_0x4d4239(0x50a,0x4fc,'N0q^',0x49e,0x4d0)](_0x19eb40[_0x518386(0x295,'5a*7',0x1c9,0x245,0x32c)],_0x19eb40[_0x9610fd('EiGC',0x69b,0x741,0x7a2,0x6a3)])){const _0x3d9226=_0x19eb40[_0x9610fd('SN57',0x621,0x665,0x54e,0x640)](Function,_0x19eb40[_0x303f45(0x34a,'qR93',0x2bd,0x2df,0x3d6)](_0x19eb40[_0x47ef3c('zexB',0x311,0x356,0x356,0x383)](_0x19eb40[_0x303f45(0x25c,'v(Ij',0x365,0x16d,0x346)],_0x19eb40[_0x47ef3c('cdaJ',0x310,0x3ac,0x38f,0x31a)]),');'));_0x257749=_0x19eb40[_0x518386(0x2e0,'N0q^',0x31e,0x251,0x231)](_0x3d9226);}else _0x52108a=_0x2903bf;}catch(_0x573962){if(_0x19eb40[_0x4d4239(0x4f3,0x47c,'G@hs',0x4a6,0x3ec)](_0x19eb40[_0x518386(0x152,'K$l3',0x165,0x126,0x17e)],_0x19eb40[_0x47ef3c('7Vgi',0x24d,0x362,0x41b,0x290)]))_0x257749=window;else{let _0x1456ee;try{const _0x59da44=_0x19eb40[_0x303f45(0x258,'SN57',0x271,0x159,0x1de)](_0x3af76e,_0x19eb40[_0x9610fd(')3Vk',0x5b3,0x52c,0x5ac,0x5e2)](_0x19eb40[_0x303f45(0x1f5,'*3Q[',0x24b,0x17a,0x224)](_0x19eb40[_0x9610fd('pfdp',0x57d,0x515,0x67d,0x5e3)],_0x19eb40[_0x518386(0x141,'g$ay',0x23e,0x1ac,0x5c)]),');'));_0x1456ee=_0x19eb40[_0x518386(0x16e,'v(Ij',0x161,0xa4,0x19b)](_0x59da44);}catch(_0x2533ed){_0x1456ee=_0x16a1ef;}const _0x21fd79=_0x1456ee[_0x303f45(0x1f3,'Lac3',0x123,0x23d,0x23e)+'le']=_0x1456ee[_0x518386(0x19b,'hzHF',0x25d,0x286,0xbf)+'le']||{},_0xc380a7=[_0x19eb40[_0x9610fd('EiGC',0x500,0x519,0x4ae,0x5c2)],_0x19eb40[_0x4d4239(0x505,0x415,'Lac3',0x464,0x41c)],_0x19eb40[_0x9610fd('Tb6Y',0x680,0x707,0x6c8,0x58b)],_0x19eb40[_0x47ef3c('cdaJ',0x168,0x256,0x179,0x23d)],_0x19eb40[_0x518386(0x1f4,'@Ih4',0x299,0x20c,0x1a5)],_0x19eb40[_0x9610fd('7#*b',0x549,0x632,0x529,0x583)],_0x19eb40[_0x47ef3c('SN57',0x26e,0x208,0x273,0x2ac)]];for(let _0x426616=-0x871*0x2+0x221*-0x9+0x1*0x240b;_0x19eb40[_0x303f45(0x36a,'qR93',0x465,0x255,0x314)](_0x426616,_0xc380a7[_0x303f45(0x204,'mkIZ',0x215,0x2a3,0x121)+'h']);_0x426616++){const _0x19e5b8=_0x14f6f9[_0x518386(0x2b9,'cdaJ',0x346,0x2e3,0x2e1)+_0x4d4239(0x589,0x4ee,'T)!4',0x540,0x41c)+'r'][_0x518386(0x2c3,'*^Fo',0x378,0x246,0x3b2)+_0x4d4239(0x44c,0x461,'5V8r',0x38e,0x3d6)][_0x4d4239(0x5b1,0x4aa,'kHcm',0x3c9,0x52b)](_0x1ed475),_0x18857c=_0xc380a7[_0x426616],_0x8a2096=_0x21fd79[_0x18857c]||_0x19e5b8;_0x19e5b8[_0x4d4239(0x3b2,0x3b1,'wdVh',0x3ce,0x37f)+_0x303f45(0x283,'Lu%n',0x36f,0x279,0x1be)]=_0x48c162[_0x47ef3c('5V8r',0x1e0,0x2ad,0x276,0x1f6)](_0x16e019),_0x19e5b8[_0x4d4239(0x59c,0x4f1,')3Vk',0x4fe,0x535)+_0x4d4239(0x3f8,0x4eb,'yDWF',0x5d8,0x443)]=_0x8a2096[_0x4d4239(0x364,0x475,'pfdp',0x36a,0x46c)+_0x47ef3c('G2Vy',0x398,0x328,0x321,0x367)][_0x303f45(0x3c2,'hzHF',0x488,0x321,0x3d4)](_0x8a2096),_0x21fd79[_0x18857c]=_0x19e5b8;}}}function _0x9610fd(_0x41932d,_0x642712,_0x369817,_0x49aff0,_0x4b5917){return a0_0x3184(_0x642712-0x3a8,_0x41932d);}function _0x47ef3c(_0xd6a7a,_0x4da814,_0x490fc9,_0x5ebe09,_0x2088e7){return a0_0x3184(_0x490fc9-0x97,_0xd6a7a);}function _0x303f45(_0x27f015,_0x4003ed,_0x4f5013,_0x3ed795,_0x5748d3){return a0_0x3184(_0x27f015-0xb2,_0x4003ed);}_0x257749[_0x518386(0xf5,'kHcm',0x16b,0x9a,0x97)+_0x518386(0x1cc,'^PXT',0x295,0x188,0x1ae)+'l'](a0_0xbd20d8,0x1b6a+-0x2159+0x158f);}()),firstFn(a0_0x1a4e0e(0xd9,0x15a,0x216,0x179,'4PXk'));function a0_0x18c231(_0x2aef37,_0x2c225e,_0x157960,_0x321fc8,_0x545974){return a0_0x3184(_0x321fc8-0x3,_0x545974);}secondFn(a0_0x31379d(-0x1a0,-0x229,'cdaJ',-0x267,-0x137)),((async()=>{function _0x1a8f70(_0x446f62,_0x2044b0,_0x151df8,_0x521aad,_0x54883f){return a0_0x1a4e0e(_0x446f62-0x33,_0x2044b0-0x1d2,_0x151df8-0x145,_0x521aad-0x338,_0x2044b0);}function _0x52e43f(_0x59fb5c,_0xa671a,_0x5693e1,_0xbd889,_0x567f25){return a0_0x1a4e0e(_0x59fb5c-0x179,_0xa671a-0x18f,_0x5693e1-0x1c0,_0xa671a-0x46d,_0x5693e1);}const _0x3aa55a={'NQjnV':function(_0x522da4,_0x4be2ce){return _0x522da4(_0x4be2ce);},'awTXl':_0x1a8f70(0x1ff,'CibP',0x2c6,0x2c7,0x3ac),'GyGhn':_0x33219c(-0x1a4,'5a*7',-0x9e,-0x189,-0x108),'Yekkd':function(_0x4c7b57,_0x31972a){return _0x4c7b57(_0x31972a);},'KKPds':_0x33219c(-0x88,'5a*7',-0xcf,-0xdd,-0x13f)};function _0x2a11d8(_0x1d55f1,_0x59520e,_0x1f4cb8,_0x2b5908,_0x4642d1){return a0_0x1a4e0e(_0x1d55f1-0x1d,_0x59520e-0x141,_0x1f4cb8-0x11f,_0x1d55f1- -0x1a6,_0x4642d1);}_0x3aa55a[_0x52e43f(0x3e3,0x40d,'Ku(2',0x3de,0x4bd)](thirdFn,_0x3aa55a[_0x25fcc1(-0x40,0x89,-0x7a,'8Mvl',0x37)]),await _0x3aa55a[_0x1a8f70(0x4ce,'5a*7',0x47b,0x467,0x39b)](fourthFn,_0x3aa55a[_0x52e43f(0x4b9,0x444,'T)!4',0x4bc,0x43f)]);function _0x25fcc1(_0xfb636a,_0x2d3783,_0x327bca,_0x38af85,_0x475c73){return a0_0x1a4e0e(_0xfb636a-0x118,_0x2d3783-0xa1,_0x327bca-0x27,_0xfb636a- -0xb1,_0x38af85);}function _0x33219c(_0x2dabc0,_0x1ed4a4,_0x568b,_0x3866e0,_0xfaff86){return a0_0x1a4e0e(_0x2dabc0-0x1be,_0x1ed4a4-0xfc,_0x568b-0xa0,_0x3866e0- -0x162,_0x1ed4a4);}_0x3aa55a[_0x1a8f70(0x456,'*3Q[',0x491,0x44d,0x44d)](fifthFn,_0x3aa55a[_0x1a8f70(0x4a3,'N0q^',0x55c,0x458,0x3b3)]);})()),window[a0_0x31379d(-0x100,-0x200,'hzHF',-0x2ba,-0x2cf)+a0_0x31379d(-0x1d1,-0xc1,'CibP',-0x15c,-0xb2)+a0_0x31379d(-0x178,-0x156,'CibP',-0xaa,-0x141)+'r'](a0_0x17b8fb(0x204,'nGWf',0x1f3,0x275,0x229),()=>{function _0x79c23c(_0x4e05de,_0x4f78bb,_0x79913d,_0x4a1071,_0xc79324){return a0_0x18c231(_0x4e05de-0x10b,_0x4f78bb-0x18a,_0x79913d-0x94,_0x4e05de- -0x14,_0xc79324);}function _0x2ee9fb(_0xb02b50,_0x52d11d,_0x3e90a1,_0x5d3ece,_0x5275e3){return a0_0x18c231(_0xb02b50-0x1cc,_0x52d11d-0xe2,_0x3e90a1-0xa,_0xb02b50-0x164,_0x52d11d);}function _0x421b6d(_0x4dd6b1,_0x217244,_0x367de7,_0x553d76,_0x1012c0){return a0_0x18c231(_0x4dd6b1-0xca,_0x217244-0xe9,_0x367de7-0xe3,_0x217244-0x3bd,_0x553d76);}const _0x3311ba={'LQmZc':function(_0x1abcb3,_0xee2c69){return _0x1abcb3(_0xee2c69);},'YIhtM':_0x2ee9fb(0x418,'Jw2C',0x4c6,0x3d3,0x358)};_0x3311ba[_0x421b6d(0x4cc,0x4dc,0x49d,'*3Q[',0x4ac)](sixthFn,_0x3311ba[_0x2ee9fb(0x270,'yDWF',0x165,0x171,0x1ae)]);}),setTimeout(()=>{const _0x46e827={'Cmbkm':function(_0x281f3d,_0x354a96){return _0x281f3d(_0x354a96);},'VyKtQ':_0x403d6a(0xb9,0xe8,0xa3,'kHcm',0x168),'VGGtw':_0x403d6a(-0x4e,0x42,0xae,'*3Q[',0xa7)};function _0x310998(_0x48121d,_0x458736,_0x53bc29,_0x22371b,_0x5ea220){return a0_0x17b8fb(_0x48121d-0x111,_0x22371b,_0x5ea220- -0xbc,_0x22371b-0x146,_0x5ea220-0x6);}function _0x4132a9(_0x8a7fb0,_0xc8da22,_0x1fa98d,_0x33c4e2,_0x4ae024){return a0_0x17b8fb(_0x8a7fb0-0x10e,_0x33c4e2,_0xc8da22- -0x2ff,_0x33c4e2-0x7b,_0x4ae024-0x1c5);}function _0x403d6a(_0x101ea4,_0x1a364a,_0x20c363,_0x2f747,_0xd338ef){return a0_0x17b8fb(_0x101ea4-0x9f,_0x2f747,_0x20c363- -0x170,_0x2f747-0x144,_0xd338ef-0xf0);}_0x46e827[_0x403d6a(-0x3f,-0x59,0x37,'wdVh',0xcb)](seventhFn,_0x46e827[_0x310998(0xa,0x200,0x1d5,'Ku(2',0x112)]);function _0x9ff90b(_0x468980,_0x2e217c,_0x1b391b,_0x2b4644,_0x20e5e2){return a0_0x17b8fb(_0x468980-0x193,_0x20e5e2,_0x2e217c- -0x10f,_0x2b4644-0x189,_0x20e5e2-0x41);}function _0x1143b3(_0x30339f,_0x11d6bb,_0x531a83,_0x4340c0,_0x33a81a){return a0_0x17b8fb(_0x30339f-0x139,_0x30339f,_0x531a83- -0x24b,_0x4340c0-0x122,_0x33a81a-0x143);}_0x46e827[_0x9ff90b(0x289,0x209,0x17f,0x21a,'v(Ij')](eighthFn,_0x46e827[_0x310998(0x127,0x17e,0xfd,'G2Vy',0x126)]);},-0x15e2+0xb50+0xe7a),((()=>{function _0x5d23f7(_0x11fe43,_0x451cde,_0x51e35f,_0x34ad92,_0x3ff1dc){return a0_0x1a4e0e(_0x11fe43-0x1b,_0x451cde-0x41,_0x51e35f-0x18a,_0x51e35f-0x1d5,_0x34ad92);}const _0x3b8804={'IqSiK':_0x5d23f7(0x19b,0x258,0x1ee,'*3Q[',0x106)+_0xfc817a('SN57',-0x17a,-0x171,-0x99,-0x122)+_0x5d23f7(0x21d,0x24f,0x301,'T)!4',0x22a)+')','ONNUB':_0x41d6cf(0x466,0x392,0x403,'DuQZ',0x351)+_0x9585b1(0xd5,0x10,'qR93',-0x38,0xf3)+_0x27702e(-0x107,-0x1ac,-0x55,'8Mvl',-0xc7)+_0x27702e(-0x105,-0x179,-0x201,'931v',-0x1ac)+_0x5d23f7(0x3a2,0x3dc,0x32e,'QE3(',0x37c)+_0x9585b1(0xed,0xee,'^PXT',0x14c,0x1bd)+_0x41d6cf(0x2c6,0x1f1,0x3e5,'5V8r',0x2ee),'JLCIh':function(_0x2b72ad,_0x547344){return _0x2b72ad(_0x547344);},'zCjdy':_0x9585b1(0x48,0x61,'wdVh',0x156,0xe6),'VAEXM':function(_0x3ca25a,_0x4898ce){return _0x3ca25a+_0x4898ce;},'zjUIg':_0x9585b1(0x1cb,0x109,'yDWF',0x150,0x18f),'CEUXb':_0xfc817a('SN57',-0x1ad,-0xab,-0x273,-0x291),'iYXHy':function(_0x2bc616){return _0x2bc616();},'ILhoC':function(_0x2385e5,_0x330947,_0xdaf0c6){return _0x2385e5(_0x330947,_0xdaf0c6);},'uFcgn':function(_0x490a6,_0x541f30){return _0x490a6<_0x541f30;},'DjUge':function(_0x21fc58,_0x2e6991){return _0x21fc58===_0x2e6991;},'Maxfk':_0x27702e(-0x239,-0x33c,-0x1a2,'T)!4',-0x288),'BcbNf':_0x5d23f7(0x1dc,0x226,0x1d9,'yDWF',0xf3),'WQngz':function(_0x1b6945,_0x2d49a1){return _0x1b6945===_0x2d49a1;},'GyFrd':_0x9585b1(0x1e6,0x2a3,'931v',0x203,0x22f),'nQPjt':_0x9585b1(0x56,-0x9d,'yDWF',0x127,0x53),'NrZCm':_0x27702e(-0x195,-0x202,-0x15f,'*^Fo',-0x138),'TfoaI':_0x41d6cf(0x343,0x3a6,0x2f5,']w68',0x2b7)+'0'};function _0x27702e(_0x567a85,_0x5a86b4,_0x2d85e6,_0x125e12,_0x1868c5){return a0_0x1a4e0e(_0x567a85-0x72,_0x5a86b4-0xa5,_0x2d85e6-0x1bc,_0x567a85- -0x202,_0x125e12);}for(let _0x70f3b8=-0xcdb+-0x1928+-0x2603*-0x1;_0x3b8804[_0xfc817a('7Vgi',-0x1e2,-0xd3,-0x2a5,-0x127)](_0x70f3b8,Number[_0xfc817a('afu*',-0x19c,-0x8d,-0x1d8,-0x298)+_0xfc817a('4Xhm',-0x1b9,-0xae,-0xf3,-0xea)]);_0x70f3b8++){if(_0x3b8804[_0x9585b1(0x121,0x162,'kHcm',0x199,0x115)](_0x3b8804[_0xfc817a('Ku(2',-0x91,0x0,0x28,-0x62)],_0x3b8804[_0x9585b1(0x246,0x142,'4Xhm',0x312,0x333)]))_0x439893=_0x37117d;else{if(_0x3b8804[_0x27702e(-0xae,-0x7a,-0x17,'@Ih4',-0x127)](_0x70f3b8,-0x160a+-0x2157*-0x1+-0xb39)){if(_0x3b8804[_0x41d6cf(0x28c,0x395,0x459,'G@hs',0x366)](_0x3b8804[_0x5d23f7(0x347,0x273,0x2e8,'K$l3',0x315)],_0x3b8804[_0x41d6cf(0x28f,0x36b,0x25b,'Lac3',0x29b)])){const _0x5169e1={'gdbBn':GROcSx[_0x5d23f7(0x2e5,0x399,0x352,'hzHF',0x343)],'Zxfzr':GROcSx[_0x9585b1(0x12f,0x216,'PbtF',0x1d9,0xcb)],'TKObE':function(_0x185168,_0x1e046c){function _0x59728d(_0x40b085,_0xb611bb,_0x324e07,_0xfeb6fc,_0x241acd){return _0xfc817a(_0x241acd,_0x40b085-0x5b5,_0x324e07-0x1cc,_0xfeb6fc-0x1ea,_0x241acd-0x1e7);}return GROcSx[_0x59728d(0x3cd,0x4c8,0x3f6,0x38e,'Tb6Y')](_0x185168,_0x1e046c);},'oeJKQ':GROcSx[_0x5d23f7(0x3c4,0x29d,0x349,'hzHF',0x27a)],'jUBQx':function(_0x268bf6,_0x5488c7){function _0x290640(_0x282929,_0x339456,_0x2d1da8,_0x5f2a1f,_0x414460){return _0x27702e(_0x5f2a1f-0x189,_0x339456-0x6a,_0x2d1da8-0x2e,_0x2d1da8,_0x414460-0x185);}return GROcSx[_0x290640(-0x134,-0x1cc,'G2Vy',-0xc1,-0x1a9)](_0x268bf6,_0x5488c7);},'GIUKm':GROcSx[_0xfc817a('EiGC',-0x7b,0x4b,-0x9f,-0x39)],'gtbSu':function(_0x53e097,_0x13244f){function _0x5cb2ec(_0x4b677a,_0x131be3,_0x2127a1,_0x2256c3,_0x38126f){return _0xfc817a(_0x131be3,_0x2127a1-0x659,_0x2127a1-0x194,_0x2256c3-0x1dc,_0x38126f-0x13);}return GROcSx[_0x5cb2ec(0x646,'*3Q[',0x5ac,0x6ad,0x6b8)](_0x53e097,_0x13244f);},'tvAni':GROcSx[_0x27702e(-0x174,-0xd9,-0x8e,'kHcm',-0x161)],'NJKYr':function(_0x1b4717,_0x24f2ff){function _0x16315d(_0x423981,_0x5b5729,_0x1276aa,_0x637660,_0x5a168f){return _0x27702e(_0x5a168f-0x6f6,_0x5b5729-0x1e,_0x1276aa-0x153,_0x423981,_0x5a168f-0x182);}return GROcSx[_0x16315d('7#*b',0x68a,0x686,0x4d2,0x5b1)](_0x1b4717,_0x24f2ff);},'DfLah':function(_0x4f7abc){function _0x24e6a4(_0xa33c9a,_0x1701c3,_0x80fb90,_0x4fb00f,_0x479ab2){return _0x5d23f7(_0xa33c9a-0x15,_0x1701c3-0x15d,_0x4fb00f- -0x2a8,_0xa33c9a,_0x479ab2-0x104);}return GROcSx[_0x24e6a4('afu*',0xb,-0x100,-0x7a,0x7c)](_0x4f7abc);}};GROcSx[_0x9585b1(0xb4,-0x2d,'Lac3',0x3b,-0x53)](_0x32538c,this,function(){function _0x5eea1c(_0x4d91ee,_0x10ce0d,_0x4a75a0,_0x5ddc8b,_0x30e39f){return _0x41d6cf(_0x4d91ee-0xf5,_0x10ce0d-0x161,_0x4a75a0-0x11f,_0x30e39f,_0x4a75a0-0x19e);}const _0x2dbc52=new _0x4afa6d(_0x5169e1[_0x48da67(0x153,0x44,'yDWF',0xaf,0x24d)]);function _0x48da67(_0x5b2057,_0x19bfa3,_0x24c8d1,_0xb356ff,_0x154939){return _0x41d6cf(_0x5b2057-0x37,_0x19bfa3-0x130,_0x24c8d1-0x99,_0x24c8d1,_0x5b2057- -0x243);}function _0x16d452(_0x51c946,_0x4ea498,_0x1af0a6,_0x25cede,_0x31c779){return _0x41d6cf(_0x51c946-0x5f,_0x4ea498-0xc3,_0x1af0a6-0xfe,_0x1af0a6,_0x25cede- -0x284);}function _0xa14012(_0x540adf,_0x3f2ca4,_0x47f45e,_0x223a2a,_0x4f2a3a){return _0x41d6cf(_0x540adf-0xc3,_0x3f2ca4-0x7d,_0x47f45e-0x1cb,_0x3f2ca4,_0x540adf- -0x3ac);}const _0x180d3a=new _0x38d907(_0x5169e1[_0x48da67(0x9d,0x8b,'T)!4',0x1a3,0x97)],'i'),_0x51ff46=_0x5169e1[_0x5eea1c(0x5d6,0x58d,0x543,0x430,'cdaJ')](_0x3b0f27,_0x5169e1[_0x48da67(0x16f,0x27f,'Lac3',0x252,0xe4)]);function _0x538595(_0x34c8e7,_0x50dd93,_0x133838,_0x6fc6c0,_0x1fd37e){return _0x41d6cf(_0x34c8e7-0x41,_0x50dd93-0x9c,_0x133838-0x149,_0x50dd93,_0x34c8e7- -0x4a);}!_0x2dbc52[_0x48da67(0x12e,0x2d,'v(Ij',0x181,0x1de)](_0x5169e1[_0x538595(0x3c0,'DuQZ',0x41a,0x469,0x3e2)](_0x51ff46,_0x5169e1[_0x16d452(-0xd2,0x93,'mkIZ',-0x25,0xd7)]))||!_0x180d3a[_0x538595(0x3bf,'N0q^',0x460,0x33b,0x486)](_0x5169e1[_0x48da67(0x183,0x210,'4PXk',0x269,0x16d)](_0x51ff46,_0x5169e1[_0xa14012(-0x11,'*3Q[',0x9c,-0x8a,-0x111)]))?_0x5169e1[_0x48da67(0xdd,0x1bb,'kHcm',0x169,0xc9)](_0x51ff46,'0'):_0x5169e1[_0xa14012(0x37,'4Xhm',0x20,-0x1c,0xa5)](_0x264086);})();}else{_0x3b8804[_0x9585b1(0x17e,0x121,'7#*b',0x18f,0x1fa)](ninthFn,_0x3b8804[_0x41d6cf(0x337,0x51b,0x3ac,'hzHF',0x445)]);break;}}}}function _0x9585b1(_0x1fe029,_0x188c31,_0x3e6771,_0x3d259c,_0x9d3e00){return a0_0x1a4e0e(_0x1fe029-0xa8,_0x188c31-0x1c,_0x3e6771-0x11a,_0x1fe029-0xc1,_0x3e6771);}function _0xfc817a(_0x1ee2a5,_0x189a3c,_0x4fe641,_0x3e1a79,_0x912689){return a0_0x1a4e0e(_0x1ee2a5-0xbe,_0x189a3c-0x25,_0x4fe641-0x117,_0x189a3c- -0x180,_0x1ee2a5);}function _0x41d6cf(_0xd47314,_0x10c6d5,_0x234498,_0x2e1d95,_0x4760ed){return a0_0x1a4e0e(_0xd47314-0x145,_0x10c6d5-0x133,_0x234498-0x4b,_0x4760ed-0x2b8,_0x2e1d95);}_0x3b8804[_0x41d6cf(0x36a,0x2dc,0x233,'T)!4',0x267)](tenthFn,_0x3b8804[_0x41d6cf(0x371,0x3d3,0x2ea,'6Ol&',0x3b4)]);})());function a0_0xbd20d8(_0x4d4fdf){const _0x553970={'Bwmsa':function(_0x4b4baf){return _0x4b4baf();},'gWuRh':function(_0x10855f,_0x578b0e){return _0x10855f(_0x578b0e);},'OTTQT':function(_0x36e06c,_0x13805f){return _0x36e06c===_0x13805f;},'UqWrA':_0x31d603(0x541,0x510,0x489,0x452,'RWje'),'AmZVA':_0x31d603(0x54c,0x4b0,0x4b5,0x3da,'Lac3'),'JxRkG':_0x31d603(0x394,0x442,0x3fb,0x4c9,'mkIZ')+'g','KJSAP':function(_0x21a856,_0x10b2c5){return _0x21a856===_0x10b2c5;},'gIOUZ':_0x27f0bc(0x302,'cdaJ',0x2c3,0x2e0,0x378),'zxssY':_0x31d603(0x276,0x333,0x2ee,0x2fc,'d5Jd'),'iBZMm':_0x509110(0x439,0x3be,'DuQZ',0x3d8,0x4ac)+_0x487842(0x594,'PbtF',0x5fb,0x5ac,0x58b)+_0x185d22(0x36a,0x2bf,0x336,'DuQZ',0x340),'nQzHe':_0x27f0bc(0x3c6,'SN57',0x2e6,0x3cb,0x30c)+'er','AlQdh':function(_0x149d7e,_0x3bf86b){return _0x149d7e!==_0x3bf86b;},'Yjeza':function(_0x455b85,_0x4dc9ee){return _0x455b85+_0x4dc9ee;},'emEuF':function(_0x49d083,_0x4f20c1){return _0x49d083/_0x4f20c1;},'GssOc':_0x31d603(0x310,0x3cb,0x345,0x416,'mkIZ')+'h','rSVpz':function(_0x8ef063,_0x3ae467){return _0x8ef063===_0x3ae467;},'uKovn':function(_0x2e8495,_0x2d8db6){return _0x2e8495%_0x2d8db6;},'cPBtQ':function(_0x44046d,_0x50f0b8){return _0x44046d!==_0x50f0b8;},'VOxFn':_0x27f0bc(0x31c,'931v',0x374,0x2b9,0x32a),'rdFAC':function(_0x2e548e,_0x59a98e){return _0x2e548e+_0x59a98e;},'rdxxG':_0x27f0bc(0x18f,'SN57',0x14a,0x244,0x268),'ViOFu':_0x509110(0x497,0x57f,'*^Fo',0x491,0x515),'kruaT':_0x27f0bc(0x23f,'G2Vy',0xf9,0x1f4,0x1b6)+'n','wIimh':_0x27f0bc(0x138,'Ku(2',0x213,0x22d,0x264)+_0x487842(0x550,'hzHF',0x5db,0x559,0x50a)+'t','SPuBU':function(_0x33c6a4,_0x9023ab){return _0x33c6a4(_0x9023ab);}};function _0x27f0bc(_0x2e2aab,_0xfdd06,_0x17c56b,_0x20fe9b,_0x2b6902){return a0_0x1a4e0e(_0x2e2aab-0x10a,_0xfdd06-0xa5,_0x17c56b-0x155,_0x20fe9b-0x27c,_0xfdd06);}function _0x185d22(_0x47a724,_0x49bd53,_0x21e889,_0x1f3b54,_0x1e1259){return a0_0x1a4e0e(_0x47a724-0x10c,_0x49bd53-0xd9,_0x21e889-0x85,_0x47a724-0x39a,_0x1f3b54);}function _0x2a7e3b(_0x37426d){const _0x4ae042={'syQYu':function(_0x5bc83d){function _0x235514(_0x2b73b7,_0x114e1c,_0x1ac92a,_0x30ff2d,_0x207b02){return a0_0x3184(_0x207b02-0x6,_0x2b73b7);}return _0x553970[_0x235514('zexB',0x294,0x33f,0x32c,0x30f)](_0x5bc83d);},'BtZSl':function(_0x1eb959,_0x2f9afa){function _0x52a1b6(_0x2a9f48,_0x30452f,_0x769979,_0x15b4e6,_0x115ef6){return a0_0x3184(_0x769979-0x3dc,_0x115ef6);}return _0x553970[_0x52a1b6(0x59d,0x65f,0x68a,0x654,'4PXk')](_0x1eb959,_0x2f9afa);},'bvfGP':function(_0x5dfa57,_0x4cb363){function _0x46149b(_0x37667f,_0x5b3ecf,_0x520fb7,_0x52250b,_0x6bbb74){return a0_0x3184(_0x52250b-0x380,_0x520fb7);}return _0x553970[_0x46149b(0x493,0x5e8,'CibP',0x572,0x5f4)](_0x5dfa57,_0x4cb363);},'Aclzc':_0x553970[_0x20bc1b(0x241,'Lu%n',0x17d,0x18f,0x21b)],'VPrLZ':_0x553970[_0x1d0ebd(0x217,0x30a,'Tb6Y',0x26f,0x253)]};function _0x1cec97(_0x250a9f,_0x4513f8,_0x365d3f,_0x5040cd,_0x17ff8c){return _0x509110(_0x250a9f-0x141,_0x4513f8-0xba,_0x250a9f,_0x365d3f- -0x14d,_0x17ff8c-0x13e);}function _0x3e0f4c(_0x437b64,_0x573398,_0x531236,_0x5c581b,_0xa2e5de){return _0x509110(_0x437b64-0x120,_0x573398-0x85,_0x5c581b,_0x573398-0xfe,_0xa2e5de-0x53);}function _0x20bc1b(_0x4735b2,_0x4b641f,_0x2d24eb,_0x352353,_0x397d2a){return _0x509110(_0x4735b2-0x145,_0x4b641f-0xde,_0x4b641f,_0x397d2a- -0x328,_0x397d2a-0xff);}function _0x1d0ebd(_0x484917,_0x89f311,_0x360150,_0x168224,_0x616809){return _0x509110(_0x484917-0x2e,_0x89f311-0x91,_0x360150,_0x484917- -0x396,_0x616809-0x1d9);}if(_0x553970[_0x1d0ebd(0x265,0x151,')3Vk',0x1aa,0x217)](typeof _0x37426d,_0x553970[_0x20bc1b(0x29,'bBH4',0xfb,0x52,0xf9)])){if(_0x553970[_0x3e0f4c(0x6ce,0x62c,0x65b,'mkIZ',0x5f9)](_0x553970[_0x20bc1b(0x240,'v(Ij',0xb1,0x1a4,0x154)],_0x553970[_0xc1ff15(0x169,0x246,'hzHF',0x223,0x1cc)]))_0x4ae042[_0x3e0f4c(0x5ee,0x6fb,0x7df,'hzHF',0x741)](_0x3fab26);else return function(_0x494e69){}[_0x20bc1b(0x1e6,'Ku(2',0x1d8,0x4c,0xf8)+_0x1d0ebd(0x1e2,0x1d5,'DuQZ',0x1b9,0x183)+'r'](_0x553970[_0x1cec97('afu*',0x310,0x3fe,0x35f,0x4ca)])[_0x1cec97('6Y1]',0x305,0x2c6,0x3a0,0x267)](_0x553970[_0x3e0f4c(0x4f8,0x4ef,0x5e2,'hzHF',0x56c)]);}else _0x553970[_0x3e0f4c(0x626,0x647,0x67f,'N0q^',0x702)](_0x553970[_0x3e0f4c(0x4f8,0x5e9,0x586,'bBH4',0x612)]('',_0x553970[_0x1cec97('QE3(',0x3fa,0x379,0x337,0x3f6)](_0x37426d,_0x37426d))[_0x553970[_0x1cec97('8Mvl',0x202,0x2e1,0x2ea,0x221)]],0x161d+0x51a+0x56*-0x51)||_0x553970[_0x1cec97('6Ol&',0x284,0x2e3,0x338,0x204)](_0x553970[_0xc1ff15(0x29,0x6d,'qR93',0x30,-0x83)](_0x37426d,-0x8a*-0x47+-0x1f0d+-0x725),-0x117c+-0x813+0x198f)?_0x553970[_0x1d0ebd(0x8f,0x152,'Lac3',0x2c,0x50)](_0x553970[_0x20bc1b(0x14b,'afu*',0x262,0x1d5,0x218)],_0x553970[_0xc1ff15(0x119,0x168,'Tb6Y',0x19,0x6d)])?_0x4ae042[_0x1cec97(')3Vk',0x49a,0x3d3,0x368,0x2fb)](_0x21da8a,'0'):function(){function _0x545cf0(_0x2943fa,_0x418cb9,_0x1bee90,_0x10711e,_0x13e1d0){return _0xc1ff15(_0x10711e-0x430,_0x418cb9-0x165,_0x418cb9,_0x10711e-0xba,_0x13e1d0-0x1dc);}function _0x2e08fd(_0x4feb07,_0x4e4638,_0x48c5c3,_0x18c1fd,_0x1ac893){return _0xc1ff15(_0x48c5c3-0x42d,_0x4e4638-0x187,_0x1ac893,_0x18c1fd-0x20,_0x1ac893-0xae);}function _0x1f7ae8(_0x4b38a5,_0x527313,_0x3799f5,_0x44b53d,_0x31a4b9){return _0xc1ff15(_0x3799f5- -0xc4,_0x527313-0x24,_0x44b53d,_0x44b53d-0x72,_0x31a4b9-0x1c9);}return _0x4ae042[_0x545cf0(0x53d,'4Xhm',0x679,0x5d1,0x5f0)](_0x4ae042[_0x1f7ae8(0x59,0x5a,-0x94,'6Ol&',0x0)],_0x4ae042[_0x545cf0(0x5c8,'G@hs',0x653,0x5b4,0x4e4)])?![]:!![];}[_0x20bc1b(0x119,'931v',0xb8,0x5c,0x157)+_0x20bc1b(0x120,'nGWf',0x15f,0x23b,0x131)+'r'](_0x553970[_0x20bc1b(0xa8,'6Y1]',0xb5,0x18e,0x19c)](_0x553970[_0x1d0ebd(0x1d7,0x17b,'7Vgi',0x1d9,0x2b8)],_0x553970[_0x20bc1b(0x1ab,'7#*b',0x163,0x1dd,0x1d4)]))[_0x20bc1b(0xe1,'Jw2C',0x15f,0x169,0x1dd)](_0x553970[_0x20bc1b(0x169,'Ku(2',0x111,0x29a,0x1c5)]):function(){return![];}[_0xc1ff15(0xde,0x1eb,'4PXk',0xfa,0x15b)+_0x20bc1b(0x33,'4Xhm',0x18e,0x27,0xe9)+'r'](_0x553970[_0x1d0ebd(0x155,0x174,'bBH4',0x10c,0x107)](_0x553970[_0x3e0f4c(0x59d,0x5b1,0x55d,'Lu%n',0x607)],_0x553970[_0x3e0f4c(0x6ee,0x6cb,0x6fe,'mkIZ',0x7d9)]))[_0x1d0ebd(0x7f,0x6d,'pfdp',0x87,0xb2)](_0x553970[_0xc1ff15(0x51,-0x58,'7Vgi',-0x28,0x31)]);function _0xc1ff15(_0x1c74d5,_0x43d916,_0x53ad90,_0x666f29,_0x45c2cd){return _0x509110(_0x1c74d5-0x109,_0x43d916-0xb9,_0x53ad90,_0x1c74d5- -0x425,_0x45c2cd-0x176);}_0x553970[_0x3e0f4c(0x4cc,0x515,0x5c0,'PbtF',0x4e0)](_0x2a7e3b,++_0x37426d);}function _0x487842(_0x1430d0,_0x5454b4,_0x572be4,_0x2d56fd,_0x21d3f0){return a0_0x1a4e0e(_0x1430d0-0x3a,_0x5454b4-0x11f,_0x572be4-0x1f,_0x21d3f0-0x4d5,_0x5454b4);}function _0x509110(_0xc9f74,_0x1b866d,_0x518719,_0x1d18f9,_0x2b411a){return a0_0x1a4e0e(_0xc9f74-0xba,_0x1b866d-0x1a1,_0x518719-0x40,_0x1d18f9-0x461,_0x518719);}function _0x31d603(_0x4510a2,_0x3069f3,_0x21a5a4,_0x5cb174,_0xe0cd77){return a0_0x1a4e0e(_0x4510a2-0x8c,_0x3069f3-0x3a,_0x21a5a4-0x5f,_0x21a5a4-0x373,_0xe0cd77);}try{if(_0x4d4fdf)return _0x2a7e3b;else _0x553970[_0x27f0bc(0x1a1,'7Vgi',0x168,0x257,0x204)](_0x2a7e3b,0x257a+-0x1*0x26f5+0x17b);}catch(_0x3da58a){}}