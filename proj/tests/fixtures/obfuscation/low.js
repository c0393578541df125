const a0_0x4a5c72=a0_0xb16b;(function(_0x563951,_0x369242){const _0x5a688f=a0_0xb16b,_0x25092b=_0x563951();while(!![]){try{const _0x42440d=parseInt(_0x5a688f(0x104))/0x1*(parseInt(_0x5a688f(0x10c))/0x2)+-parseInt(_0x5a688f(0xf6))/0x3*(-parseInt(_0x5a688f(0xfc))/0x4)+-parseInt(_0x5a688f(0x113))/0x5*(parseInt(_0x5a688f(0x11b))/0x6)+-parseInt(_0x5a688f(0x118))/0x7+-parseInt(_0x5a688f(0xfa))/0x8*(parseInt(_0x5a688f(0x108))/0x9)+parseInt(_0x5a688f(0xf9))/0xa+-parseInt(_0x5a688f(0x110))/0xb*(-parseInt(_0x5a688f(0x102))/0xc);if(_0x42440d===_0x369242)break;else _0x25092b['push'](_0x25092b['shift']());}catch(_0x14e932){_0x25092b['push'](_0x25092b['shift']());}}}(a0_0x2840,0xa10c9));const a0_0x261bb3=(function(){let _0x582566=!![];return function(_0x297c83,_0x39af3b){const _0x5513af=_0x582566?function(){if(_0x39af3b){const _0x1c4a20=_0x39af3b['apply'](_0x297c83,arguments);return _0x39af3b=null,_0x1c4a20;}}:function(){};return _0x582566=![],_0x5513af;};}()),a0_0xbd20d8=a0_0x261bb3(this,function(){const _0x5e8486=a0_0xb16b;if(a0_0xbd20d8[_0x5e8486(0x115)]()[_0x5e8486(0x111)]()[_0x5e8486(0x105)]('\x0a')!==-0x1)return;return a0_0xbd20d8[_0x5e8486(0x111)]()[_0x5e8486(0x101)](_0x5e8486(0x114))[_0x5e8486(0x111)]()[_0x5e8486(0x119)](a0_0xbd20d8)['search'](_0x5e8486(0x114));});function a0_0xb16b(_0x3961b1,_0x40673c){_0x3961b1=_0x3961b1-0xf6;const _0x366f5b=a0_0x2840();let _0x15f74b=_0x366f5b[_0x3961b1];return _0x15f74b;}a0_0xbd20d8();function a0_0x2840(){const _0x19da4d=['913080NzbbPr','879yXuSBn','length','ARG_2','2583000RZhUYj','2088912yTkSwo','error','3460GwmWeK','console','ARG_9','log','ARG_8','search','816fKAzUa','MAX_VALUE','31YFUsxI','indexOf','__proto__','apply','9uDuBxh','ARG_10','load','exception','48718NZRYWo','ARG_5','{}.constructor(\x22return\x20this\x22)(\x20)','trace','326887IiaxXE','toString','prototype','40qlqNmT','(((.+)+)+)+$','bind','ARG_6','ARG_4','8045933pcdJzy','constructor','ARG_7'];a0_0x2840=function(){return _0x19da4d;};return a0_0x2840();}const a0_0x539502=(function(){let _0x366fd9=!![];return function(_0x4987b4,_0x411bc4){const _0x16b9a6=_0x366fd9?function(){const _0x21bd0e=a0_0xb16b;if(_0x411bc4){const _0x3876af=_0x411bc4[_0x21bd0e(0x107)](_0x4987b4,arguments);return _0x411bc4=null,_0x3876af;}}:function(){};return _0x366fd9=![],_0x16b9a6;};}()),a0_0x15f74b=a0_0x539502(this,function(){const _0x3e960d=a0_0xb16b;let _0x3d45b2;try{const _0x5e8ed9=Function('return\x20(function()\x20'+_0x3e960d(0x10e)+');');_0x3d45b2=_0x5e8ed9();}catch(_0x2fcbde){_0x3d45b2=window;}const _0x1c7927=_0x3d45b2[_0x3e960d(0xfd)]=_0x3d45b2[_0x3e960d(0xfd)]||{},_0x1ea054=[_0x3e960d(0xff),'warn','info',_0x3e960d(0xfb),_0x3e960d(0x10b),'table',_0x3e960d(0x10f)];for(let _0x4eb758=0x0;_0x4eb758<_0x1ea054[_0x3e960d(0xf7)];_0x4eb758++){const _0x32538c=a0_0x539502['constructor'][_0x3e960d(0x112)]['bind'](a0_0x539502),_0x571eaa=_0x1ea054[_0x4eb758],_0xaa30b7=_0x1c7927[_0x571eaa]||_0x32538c;_0x32538c[_0x3e960d(0x106)]=a0_0x539502[_0x3e960d(0x115)](a0_0x539502),_0x32538c[_0x3e960d(0x111)]=_0xaa30b7[_0x3e960d(0x111)][_0x3e960d(0x115)](_0xaa30b7),_0x1c7927[_0x571eaa]=_0x32538c;}});a0_0x15f74b(),firstFn('ARG_1'),secondFn(a0_0x4a5c72(0xf8)),((async()=>{const _0x231f1d=a0_0x4a5c72;thirdFn('ARG_3'),await fourthFn(_0x231f1d(0x117)),fifthFn(_0x231f1d(0x10d));})()),window['addEventListener'](a0_0x4a5c72(0x10a),()=>{const _0xd92df3=a0_0x4a5c72;sixthFn(_0xd92df3(0x116));}),setTimeout(()=>{const _0x40df14=a0_0x4a5c72;seventhFn(_0x40df14(0x11a)),eighthFn(_0x40df14(0x100));},0x3e8),((()=>{const _0x440b1a=a0_0x4a5c72;for(let _0xf56c8f=0x0;_0xf56c8f<Number[_0x440b1a(0x103)];_0xf56c8f++){if(_0xf56c8f===0x14){ninthFn(_0x440b1a(0xfe));break;}}tenthFn(_0x440b1a(0x109));})());