#include "perc/lattice.hpp"
#include <stdexcept>

namespace perc::lattice {
namespace {

const char *const kCell_square_2d =
    R"CELL(dim 2; nodes 1; edges 2
0 1 0.5 0.5
0 0 1 0 generic
0 0 0 1 generic
)CELL";

const char *const kCell_diamond_3d =
    R"CELL(dim 3; nodes 8; edges 16
0 1 0 0 0
1 1 0.5 0.5 0
2 1 0.5 0 0.5
3 1 0 0.5 0.5
4 1 0.25 0.25 0.25
5 1 0.75 0.75 0.25
6 1 0.75 0.25 0.75
7 1 0.25 0.75 0.75
0 4 0 0 0 generic
0 7 0 -1 -1 generic
0 6 -1 0 -1 generic
0 5 -1 -1 0 generic
1 5 0 0 0 generic
1 6 0 0 -1 generic
1 7 0 0 -1 generic
1 4 0 0 0 generic
2 6 0 0 0 generic
2 5 0 -1 0 generic
2 4 0 0 0 generic
2 7 0 -1 0 generic
3 7 0 0 0 generic
3 4 0 0 0 generic
3 5 -1 0 0 generic
3 6 -1 0 0 generic
)CELL";

const char *const kCell_two_layer_logical_square =
    R"CELL(dim 2; nodes 3; edges 4
0 0 0.5 0.25
1 0 0.5 0.75
2 1 0.5 0.5
0 0 1 0 green
1 1 0 1 green
2 0 0 0 blue
2 1 0 0 blue
)CELL";

const char *const kCell_brickwork_mod_2d =
    R"CELL(dim 2; nodes 18; edges 24
0 0 0.0833333 0.125
1 0 0.25 0.125
2 0 0.416667 0.125
3 0 0.583333 0.125
4 0 0.75 0.125
5 0 0.916667 0.125
6 0 0.0833333 0.625
7 0 0.25 0.625
8 0 0.416667 0.625
9 0 0.583333 0.625
10 0 0.75 0.625
11 0 0.916667 0.625
12 1 0.0833333 0.375
13 1 0.25 0.375
14 1 0.416667 0.375
15 1 0.583333 0.875
16 1 0.75 0.875
17 1 0.916667 0.875
0 1 0 0 green
1 2 0 0 green
2 3 0 0 green
3 4 0 0 green
4 5 0 0 green
5 0 1 0 green
6 7 0 0 green
7 8 0 0 green
8 9 0 0 green
9 10 0 0 green
10 11 0 0 green
11 6 1 0 green
0 12 0 0 blue
12 6 0 0 blue
1 13 0 0 blue
13 7 0 0 blue
2 14 0 0 blue
14 8 0 0 blue
9 15 0 0 blue
15 3 0 1 blue
10 16 0 0 blue
16 4 0 1 blue
11 17 0 0 blue
17 5 0 1 blue
)CELL";

const char *const kCell_b103_standard_3d =
    R"CELL(dim 3; nodes 8; edges 12
0 0 0.25 0.25 0.25
1 0 0.25 0.25 0.75
2 0 0.25 0.75 0.25
3 0 0.25 0.75 0.75
4 0 0.75 0.25 0.25
5 0 0.75 0.25 0.75
6 0 0.75 0.75 0.25
7 0 0.75 0.75 0.75
0 4 0 0 0 green
0 1 0 0 0 blue
1 3 0 0 0 green
2 6 0 0 0 green
3 1 0 1 0 green
3 2 0 0 1 blue
4 0 1 0 0 green
5 7 0 0 0 green
5 4 0 0 1 blue
6 2 1 0 0 green
6 7 0 0 0 blue
7 5 0 1 0 green
)CELL";

const char *const kCell_b103_mod_3d =
    R"CELL(dim 3; nodes 12; edges 16
0 0 0.25 0.25 0.25
1 0 0.25 0.25 0.75
2 0 0.25 0.75 0.25
3 0 0.25 0.75 0.75
4 0 0.75 0.25 0.25
5 0 0.75 0.25 0.75
6 0 0.75 0.75 0.25
7 0 0.75 0.75 0.75
8 1 0.25 0.25 0.5
9 1 0.25 0.75 0
10 1 0.75 0.25 0
11 1 0.75 0.75 0.5
0 4 0 0 0 green
0 8 0 0 0 blue
8 1 0 0 0 blue
1 3 0 0 0 green
2 6 0 0 0 green
3 1 0 1 0 green
3 9 0 0 0 blue
9 2 0 0 1 blue
4 0 1 0 0 green
5 7 0 0 0 green
5 10 0 0 0 blue
10 4 0 0 1 blue
6 2 1 0 0 green
6 11 0 0 0 blue
11 7 0 0 0 blue
7 5 0 1 0 green
)CELL";

const char *const kCell_b103_mod_4d =
    R"CELL(dim 4; nodes 384; edges 512
0 0 0.125 0.125 0.125 0.125
1 0 0.125 0.125 0.125 0.375
2 0 0.125 0.125 0.125 0.625
3 0 0.125 0.125 0.125 0.875
4 0 0.125 0.125 0.375 0.125
5 0 0.125 0.125 0.375 0.375
6 0 0.125 0.125 0.375 0.625
7 0 0.125 0.125 0.375 0.875
8 0 0.125 0.125 0.625 0.125
9 0 0.125 0.125 0.625 0.375
10 0 0.125 0.125 0.625 0.625
11 0 0.125 0.125 0.625 0.875
12 0 0.125 0.125 0.875 0.125
13 0 0.125 0.125 0.875 0.375
14 0 0.125 0.125 0.875 0.625
15 0 0.125 0.125 0.875 0.875
16 0 0.125 0.375 0.125 0.125
17 0 0.125 0.375 0.125 0.375
18 0 0.125 0.375 0.125 0.625
19 0 0.125 0.375 0.125 0.875
20 0 0.125 0.375 0.375 0.125
21 0 0.125 0.375 0.375 0.375
22 0 0.125 0.375 0.375 0.625
23 0 0.125 0.375 0.375 0.875
24 0 0.125 0.375 0.625 0.125
25 0 0.125 0.375 0.625 0.375
26 0 0.125 0.375 0.625 0.625
27 0 0.125 0.375 0.625 0.875
28 0 0.125 0.375 0.875 0.125
29 0 0.125 0.375 0.875 0.375
30 0 0.125 0.375 0.875 0.625
31 0 0.125 0.375 0.875 0.875
32 0 0.125 0.625 0.125 0.125
33 0 0.125 0.625 0.125 0.375
34 0 0.125 0.625 0.125 0.625
35 0 0.125 0.625 0.125 0.875
36 0 0.125 0.625 0.375 0.125
37 0 0.125 0.625 0.375 0.375
38 0 0.125 0.625 0.375 0.625
39 0 0.125 0.625 0.375 0.875
40 0 0.125 0.625 0.625 0.125
41 0 0.125 0.625 0.625 0.375
42 0 0.125 0.625 0.625 0.625
43 0 0.125 0.625 0.625 0.875
44 0 0.125 0.625 0.875 0.125
45 0 0.125 0.625 0.875 0.375
46 0 0.125 0.625 0.875 0.625
47 0 0.125 0.625 0.875 0.875
48 0 0.125 0.875 0.125 0.125
49 0 0.125 0.875 0.125 0.375
50 0 0.125 0.875 0.125 0.625
51 0 0.125 0.875 0.125 0.875
52 0 0.125 0.875 0.375 0.125
53 0 0.125 0.875 0.375 0.375
54 0 0.125 0.875 0.375 0.625
55 0 0.125 0.875 0.375 0.875
56 0 0.125 0.875 0.625 0.125
57 0 0.125 0.875 0.625 0.375
58 0 0.125 0.875 0.625 0.625
59 0 0.125 0.875 0.625 0.875
60 0 0.125 0.875 0.875 0.125
61 0 0.125 0.875 0.875 0.375
62 0 0.125 0.875 0.875 0.625
63 0 0.125 0.875 0.875 0.875
64 0 0.375 0.125 0.125 0.125
65 0 0.375 0.125 0.125 0.375
66 0 0.375 0.125 0.125 0.625
67 0 0.375 0.125 0.125 0.875
68 0 0.375 0.125 0.375 0.125
69 0 0.375 0.125 0.375 0.375
70 0 0.375 0.125 0.375 0.625
71 0 0.375 0.125 0.375 0.875
72 0 0.375 0.125 0.625 0.125
73 0 0.375 0.125 0.625 0.375
74 0 0.375 0.125 0.625 0.625
75 0 0.375 0.125 0.625 0.875
76 0 0.375 0.125 0.875 0.125
77 0 0.375 0.125 0.875 0.375
78 0 0.375 0.125 0.875 0.625
79 0 0.375 0.125 0.875 0.875
80 0 0.375 0.375 0.125 0.125
81 0 0.375 0.375 0.125 0.375
82 0 0.375 0.375 0.125 0.625
83 0 0.375 0.375 0.125 0.875
84 0 0.375 0.375 0.375 0.125
85 0 0.375 0.375 0.375 0.375
86 0 0.375 0.375 0.375 0.625
87 0 0.375 0.375 0.375 0.875
88 0 0.375 0.375 0.625 0.125
89 0 0.375 0.375 0.625 0.375
90 0 0.375 0.375 0.625 0.625
91 0 0.375 0.375 0.625 0.875
92 0 0.375 0.375 0.875 0.125
93 0 0.375 0.375 0.875 0.375
94 0 0.375 0.375 0.875 0.625
95 0 0.375 0.375 0.875 0.875
96 0 0.375 0.625 0.125 0.125
97 0 0.375 0.625 0.125 0.375
98 0 0.375 0.625 0.125 0.625
99 0 0.375 0.625 0.125 0.875
100 0 0.375 0.625 0.375 0.125
101 0 0.375 0.625 0.375 0.375
102 0 0.375 0.625 0.375 0.625
103 0 0.375 0.625 0.375 0.875
104 0 0.375 0.625 0.625 0.125
105 0 0.375 0.625 0.625 0.375
106 0 0.375 0.625 0.625 0.625
107 0 0.375 0.625 0.625 0.875
108 0 0.375 0.625 0.875 0.125
109 0 0.375 0.625 0.875 0.375
110 0 0.375 0.625 0.875 0.625
111 0 0.375 0.625 0.875 0.875
112 0 0.375 0.875 0.125 0.125
113 0 0.375 0.875 0.125 0.375
114 0 0.375 0.875 0.125 0.625
115 0 0.375 0.875 0.125 0.875
116 0 0.375 0.875 0.375 0.125
117 0 0.375 0.875 0.375 0.375
118 0 0.375 0.875 0.375 0.625
119 0 0.375 0.875 0.375 0.875
120 0 0.375 0.875 0.625 0.125
121 0 0.375 0.875 0.625 0.375
122 0 0.375 0.875 0.625 0.625
123 0 0.375 0.875 0.625 0.875
124 0 0.375 0.875 0.875 0.125
125 0 0.375 0.875 0.875 0.375
126 0 0.375 0.875 0.875 0.625
127 0 0.375 0.875 0.875 0.875
128 0 0.625 0.125 0.125 0.125
129 0 0.625 0.125 0.125 0.375
130 0 0.625 0.125 0.125 0.625
131 0 0.625 0.125 0.125 0.875
132 0 0.625 0.125 0.375 0.125
133 0 0.625 0.125 0.375 0.375
134 0 0.625 0.125 0.375 0.625
135 0 0.625 0.125 0.375 0.875
136 0 0.625 0.125 0.625 0.125
137 0 0.625 0.125 0.625 0.375
138 0 0.625 0.125 0.625 0.625
139 0 0.625 0.125 0.625 0.875
140 0 0.625 0.125 0.875 0.125
141 0 0.625 0.125 0.875 0.375
142 0 0.625 0.125 0.875 0.625
143 0 0.625 0.125 0.875 0.875
144 0 0.625 0.375 0.125 0.125
145 0 0.625 0.375 0.125 0.375
146 0 0.625 0.375 0.125 0.625
147 0 0.625 0.375 0.125 0.875
148 0 0.625 0.375 0.375 0.125
149 0 0.625 0.375 0.375 0.375
150 0 0.625 0.375 0.375 0.625
151 0 0.625 0.375 0.375 0.875
152 0 0.625 0.375 0.625 0.125
153 0 0.625 0.375 0.625 0.375
154 0 0.625 0.375 0.625 0.625
155 0 0.625 0.375 0.625 0.875
156 0 0.625 0.375 0.875 0.125
157 0 0.625 0.375 0.875 0.375
158 0 0.625 0.375 0.875 0.625
159 0 0.625 0.375 0.875 0.875
160 0 0.625 0.625 0.125 0.125
161 0 0.625 0.625 0.125 0.375
162 0 0.625 0.625 0.125 0.625
163 0 0.625 0.625 0.125 0.875
164 0 0.625 0.625 0.375 0.125
165 0 0.625 0.625 0.375 0.375
166 0 0.625 0.625 0.375 0.625
167 0 0.625 0.625 0.375 0.875
168 0 0.625 0.625 0.625 0.125
169 0 0.625 0.625 0.625 0.375
170 0 0.625 0.625 0.625 0.625
171 0 0.625 0.625 0.625 0.875
172 0 0.625 0.625 0.875 0.125
173 0 0.625 0.625 0.875 0.375
174 0 0.625 0.625 0.875 0.625
175 0 0.625 0.625 0.875 0.875
176 0 0.625 0.875 0.125 0.125
177 0 0.625 0.875 0.125 0.375
178 0 0.625 0.875 0.125 0.625
179 0 0.625 0.875 0.125 0.875
180 0 0.625 0.875 0.375 0.125
181 0 0.625 0.875 0.375 0.375
182 0 0.625 0.875 0.375 0.625
183 0 0.625 0.875 0.375 0.875
184 0 0.625 0.875 0.625 0.125
185 0 0.625 0.875 0.625 0.375
186 0 0.625 0.875 0.625 0.625
187 0 0.625 0.875 0.625 0.875
188 0 0.625 0.875 0.875 0.125
189 0 0.625 0.875 0.875 0.375
190 0 0.625 0.875 0.875 0.625
191 0 0.625 0.875 0.875 0.875
192 0 0.875 0.125 0.125 0.125
193 0 0.875 0.125 0.125 0.375
194 0 0.875 0.125 0.125 0.625
195 0 0.875 0.125 0.125 0.875
196 0 0.875 0.125 0.375 0.125
197 0 0.875 0.125 0.375 0.375
198 0 0.875 0.125 0.375 0.625
199 0 0.875 0.125 0.375 0.875
200 0 0.875 0.125 0.625 0.125
201 0 0.875 0.125 0.625 0.375
202 0 0.875 0.125 0.625 0.625
203 0 0.875 0.125 0.625 0.875
204 0 0.875 0.125 0.875 0.125
205 0 0.875 0.125 0.875 0.375
206 0 0.875 0.125 0.875 0.625
207 0 0.875 0.125 0.875 0.875
208 0 0.875 0.375 0.125 0.125
209 0 0.875 0.375 0.125 0.375
210 0 0.875 0.375 0.125 0.625
211 0 0.875 0.375 0.125 0.875
212 0 0.875 0.375 0.375 0.125
213 0 0.875 0.375 0.375 0.375
214 0 0.875 0.375 0.375 0.625
215 0 0.875 0.375 0.375 0.875
216 0 0.875 0.375 0.625 0.125
217 0 0.875 0.375 0.625 0.375
218 0 0.875 0.375 0.625 0.625
219 0 0.875 0.375 0.625 0.875
220 0 0.875 0.375 0.875 0.125
221 0 0.875 0.375 0.875 0.375
222 0 0.875 0.375 0.875 0.625
223 0 0.875 0.375 0.875 0.875
224 0 0.875 0.625 0.125 0.125
225 0 0.875 0.625 0.125 0.375
226 0 0.875 0.625 0.125 0.625
227 0 0.875 0.625 0.125 0.875
228 0 0.875 0.625 0.375 0.125
229 0 0.875 0.625 0.375 0.375
230 0 0.875 0.625 0.375 0.625
231 0 0.875 0.625 0.375 0.875
232 0 0.875 0.625 0.625 0.125
233 0 0.875 0.625 0.625 0.375
234 0 0.875 0.625 0.625 0.625
235 0 0.875 0.625 0.625 0.875
236 0 0.875 0.625 0.875 0.125
237 0 0.875 0.625 0.875 0.375
238 0 0.875 0.625 0.875 0.625
239 0 0.875 0.625 0.875 0.875
240 0 0.875 0.875 0.125 0.125
241 0 0.875 0.875 0.125 0.375
242 0 0.875 0.875 0.125 0.625
243 0 0.875 0.875 0.125 0.875
244 0 0.875 0.875 0.375 0.125
245 0 0.875 0.875 0.375 0.375
246 0 0.875 0.875 0.375 0.625
247 0 0.875 0.875 0.375 0.875
248 0 0.875 0.875 0.625 0.125
249 0 0.875 0.875 0.625 0.375
250 0 0.875 0.875 0.625 0.625
251 0 0.875 0.875 0.625 0.875
252 0 0.875 0.875 0.875 0.125
253 0 0.875 0.875 0.875 0.375
254 0 0.875 0.875 0.875 0.625
255 0 0.875 0.875 0.875 0.875
256 1 0.125 0.125 0.25 0.125
257 1 0.125 0.125 0.25 0.625
258 1 0.125 0.125 0.5 0.375
259 1 0.125 0.125 0.5 0.875
260 1 0.125 0.125 0.75 0.125
261 1 0.125 0.125 0.75 0.625
262 1 0.125 0.125 0 0.375
263 1 0.125 0.125 0 0.875
264 1 0.125 0.375 0.125 0.25
265 1 0.125 0.375 0.125 0.75
266 1 0.125 0.375 0.375 0.5
267 1 0.125 0.375 0.375 0
268 1 0.125 0.375 0.625 0.25
269 1 0.125 0.375 0.625 0.75
270 1 0.125 0.375 0.875 0.5
271 1 0.125 0.375 0.875 0
272 1 0.125 0.625 0.25 0.375
273 1 0.125 0.625 0.25 0.875
274 1 0.125 0.625 0.5 0.125
275 1 0.125 0.625 0.5 0.625
276 1 0.125 0.625 0.75 0.375
277 1 0.125 0.625 0.75 0.875
278 1 0.125 0.625 0 0.125
279 1 0.125 0.625 0 0.625
280 1 0.125 0.875 0.125 0.5
281 1 0.125 0.875 0.125 0
282 1 0.125 0.875 0.375 0.25
283 1 0.125 0.875 0.375 0.75
284 1 0.125 0.875 0.625 0.5
285 1 0.125 0.875 0.625 0
286 1 0.125 0.875 0.875 0.25
287 1 0.125 0.875 0.875 0.75
288 1 0.375 0.125 0.125 0.25
289 1 0.375 0.125 0.125 0.75
290 1 0.375 0.125 0.375 0.5
291 1 0.375 0.125 0.375 0
292 1 0.375 0.125 0.625 0.25
293 1 0.375 0.125 0.625 0.75
294 1 0.375 0.125 0.875 0.5
295 1 0.375 0.125 0.875 0
296 1 0.375 0.375 0.25 0.375
297 1 0.375 0.375 0.25 0.875
298 1 0.375 0.375 0.5 0.125
299 1 0.375 0.375 0.5 0.625
300 1 0.375 0.375 0.75 0.375
301 1 0.375 0.375 0.75 0.875
302 1 0.375 0.375 0 0.125
303 1 0.375 0.375 0 0.625
304 1 0.375 0.625 0.125 0.5
305 1 0.375 0.625 0.125 0
306 1 0.375 0.625 0.375 0.25
307 1 0.375 0.625 0.375 0.75
308 1 0.375 0.625 0.625 0.5
309 1 0.375 0.625 0.625 0
310 1 0.375 0.625 0.875 0.25
311 1 0.375 0.625 0.875 0.75
312 1 0.375 0.875 0.25 0.125
313 1 0.375 0.875 0.25 0.625
314 1 0.375 0.875 0.5 0.375
315 1 0.375 0.875 0.5 0.875
316 1 0.375 0.875 0.75 0.125
317 1 0.375 0.875 0.75 0.625
318 1 0.375 0.875 0 0.375
319 1 0.375 0.875 0 0.875
320 1 0.625 0.125 0.25 0.375
321 1 0.625 0.125 0.25 0.875
322 1 0.625 0.125 0.5 0.125
323 1 0.625 0.125 0.5 0.625
324 1 0.625 0.125 0.75 0.375
325 1 0.625 0.125 0.75 0.875
326 1 0.625 0.125 0 0.125
327 1 0.625 0.125 0 0.625
328 1 0.625 0.375 0.125 0.5
329 1 0.625 0.375 0.125 0
330 1 0.625 0.375 0.375 0.25
331 1 0.625 0.375 0.375 0.75
332 1 0.625 0.375 0.625 0.5
333 1 0.625 0.375 0.625 0
334 1 0.625 0.375 0.875 0.25
335 1 0.625 0.375 0.875 0.75
336 1 0.625 0.625 0.25 0.125
337 1 0.625 0.625 0.25 0.625
338 1 0.625 0.625 0.5 0.375
339 1 0.625 0.625 0.5 0.875
340 1 0.625 0.625 0.75 0.125
341 1 0.625 0.625 0.75 0.625
342 1 0.625 0.625 0 0.375
343 1 0.625 0.625 0 0.875
344 1 0.625 0.875 0.125 0.25
345 1 0.625 0.875 0.125 0.75
346 1 0.625 0.875 0.375 0.5
347 1 0.625 0.875 0.375 0
348 1 0.625 0.875 0.625 0.25
349 1 0.625 0.875 0.625 0.75
350 1 0.625 0.875 0.875 0.5
351 1 0.625 0.875 0.875 0
352 1 0.875 0.125 0.125 0.5
353 1 0.875 0.125 0.125 0
354 1 0.875 0.125 0.375 0.25
355 1 0.875 0.125 0.375 0.75
356 1 0.875 0.125 0.625 0.5
357 1 0.875 0.125 0.625 0
358 1 0.875 0.125 0.875 0.25
359 1 0.875 0.125 0.875 0.75
360 1 0.875 0.375 0.25 0.125
361 1 0.875 0.375 0.25 0.625
362 1 0.875 0.375 0.5 0.375
363 1 0.875 0.375 0.5 0.875
364 1 0.875 0.375 0.75 0.125
365 1 0.875 0.375 0.75 0.625
366 1 0.875 0.375 0 0.375
367 1 0.875 0.375 0 0.875
368 1 0.875 0.625 0.125 0.25
369 1 0.875 0.625 0.125 0.75
370 1 0.875 0.625 0.375 0.5
371 1 0.875 0.625 0.375 0
372 1 0.875 0.625 0.625 0.25
373 1 0.875 0.625 0.625 0.75
374 1 0.875 0.625 0.875 0.5
375 1 0.875 0.625 0.875 0
376 1 0.875 0.875 0.25 0.375
377 1 0.875 0.875 0.25 0.875
378 1 0.875 0.875 0.5 0.125
379 1 0.875 0.875 0.5 0.625
380 1 0.875 0.875 0.75 0.375
381 1 0.875 0.875 0.75 0.875
382 1 0.875 0.875 0 0.125
383 1 0.875 0.875 0 0.625
0 64 0 0 0 0 green
0 256 0 0 0 0 blue
256 4 0 0 0 0 blue
1 17 0 0 0 0 green
2 66 0 0 0 0 green
2 257 0 0 0 0 blue
257 6 0 0 0 0 blue
3 19 0 0 0 0 green
4 20 0 0 0 0 green
5 69 0 0 0 0 green
5 258 0 0 0 0 blue
258 9 0 0 0 0 blue
6 22 0 0 0 0 green
7 71 0 0 0 0 green
7 259 0 0 0 0 blue
259 11 0 0 0 0 blue
8 72 0 0 0 0 green
8 260 0 0 0 0 blue
260 12 0 0 0 0 blue
9 25 0 0 0 0 green
10 74 0 0 0 0 green
10 261 0 0 0 0 blue
261 14 0 0 0 0 blue
11 27 0 0 0 0 green
12 28 0 0 0 0 green
13 77 0 0 0 0 green
13 262 0 0 0 0 blue
262 1 0 0 1 0 blue
14 30 0 0 0 0 green
15 79 0 0 0 0 green
15 263 0 0 0 0 blue
263 3 0 0 1 0 blue
16 80 0 0 0 0 green
16 264 0 0 0 0 blue
264 17 0 0 0 0 blue
17 33 0 0 0 0 green
18 82 0 0 0 0 green
18 265 0 0 0 0 blue
265 19 0 0 0 0 blue
19 35 0 0 0 0 green
20 36 0 0 0 0 green
21 85 0 0 0 0 green
21 266 0 0 0 0 blue
266 22 0 0 0 0 blue
22 38 0 0 0 0 green
23 87 0 0 0 0 green
23 267 0 0 0 0 blue
267 20 0 0 0 1 blue
24 88 0 0 0 0 green
24 268 0 0 0 0 blue
268 25 0 0 0 0 blue
25 41 0 0 0 0 green
26 90 0 0 0 0 green
26 269 0 0 0 0 blue
269 27 0 0 0 0 blue
27 43 0 0 0 0 green
28 44 0 0 0 0 green
29 93 0 0 0 0 green
29 270 0 0 0 0 blue
270 30 0 0 0 0 blue
30 46 0 0 0 0 green
31 95 0 0 0 0 green
31 271 0 0 0 0 blue
271 28 0 0 0 1 blue
32 96 0 0 0 0 green
33 49 0 0 0 0 green
33 272 0 0 0 0 blue
272 37 0 0 0 0 blue
34 98 0 0 0 0 green
35 51 0 0 0 0 green
35 273 0 0 0 0 blue
273 39 0 0 0 0 blue
36 52 0 0 0 0 green
36 274 0 0 0 0 blue
274 40 0 0 0 0 blue
37 101 0 0 0 0 green
38 54 0 0 0 0 green
38 275 0 0 0 0 blue
275 42 0 0 0 0 blue
39 103 0 0 0 0 green
40 104 0 0 0 0 green
41 57 0 0 0 0 green
41 276 0 0 0 0 blue
276 45 0 0 0 0 blue
42 106 0 0 0 0 green
43 59 0 0 0 0 green
43 277 0 0 0 0 blue
277 47 0 0 0 0 blue
44 60 0 0 0 0 green
44 278 0 0 0 0 blue
278 32 0 0 1 0 blue
45 109 0 0 0 0 green
46 62 0 0 0 0 green
46 279 0 0 0 0 blue
279 34 0 0 1 0 blue
47 111 0 0 0 0 green
48 112 0 0 0 0 green
49 1 0 1 0 0 green
49 280 0 0 0 0 blue
280 50 0 0 0 0 blue
50 114 0 0 0 0 green
51 3 0 1 0 0 green
51 281 0 0 0 0 blue
281 48 0 0 0 1 blue
52 4 0 1 0 0 green
52 282 0 0 0 0 blue
282 53 0 0 0 0 blue
53 117 0 0 0 0 green
54 6 0 1 0 0 green
54 283 0 0 0 0 blue
283 55 0 0 0 0 blue
55 119 0 0 0 0 green
56 120 0 0 0 0 green
57 9 0 1 0 0 green
57 284 0 0 0 0 blue
284 58 0 0 0 0 blue
58 122 0 0 0 0 green
59 11 0 1 0 0 green
59 285 0 0 0 0 blue
285 56 0 0 0 1 blue
60 12 0 1 0 0 green
60 286 0 0 0 0 blue
286 61 0 0 0 0 blue
61 125 0 0 0 0 green
62 14 0 1 0 0 green
62 287 0 0 0 0 blue
287 63 0 0 0 0 blue
63 127 0 0 0 0 green
64 128 0 0 0 0 green
64 288 0 0 0 0 blue
288 65 0 0 0 0 blue
65 81 0 0 0 0 green
66 130 0 0 0 0 green
66 289 0 0 0 0 blue
289 67 0 0 0 0 blue
67 83 0 0 0 0 green
68 84 0 0 0 0 green
69 133 0 0 0 0 green
69 290 0 0 0 0 blue
290 70 0 0 0 0 blue
70 86 0 0 0 0 green
71 135 0 0 0 0 green
71 291 0 0 0 0 blue
291 68 0 0 0 1 blue
72 136 0 0 0 0 green
72 292 0 0 0 0 blue
292 73 0 0 0 0 blue
73 89 0 0 0 0 green
74 138 0 0 0 0 green
74 293 0 0 0 0 blue
293 75 0 0 0 0 blue
75 91 0 0 0 0 green
76 92 0 0 0 0 green
77 141 0 0 0 0 green
77 294 0 0 0 0 blue
294 78 0 0 0 0 blue
78 94 0 0 0 0 green
79 143 0 0 0 0 green
79 295 0 0 0 0 blue
295 76 0 0 0 1 blue
80 144 0 0 0 0 green
81 97 0 0 0 0 green
81 296 0 0 0 0 blue
296 85 0 0 0 0 blue
82 146 0 0 0 0 green
83 99 0 0 0 0 green
83 297 0 0 0 0 blue
297 87 0 0 0 0 blue
84 100 0 0 0 0 green
84 298 0 0 0 0 blue
298 88 0 0 0 0 blue
85 149 0 0 0 0 green
86 102 0 0 0 0 green
86 299 0 0 0 0 blue
299 90 0 0 0 0 blue
87 151 0 0 0 0 green
88 152 0 0 0 0 green
89 105 0 0 0 0 green
89 300 0 0 0 0 blue
300 93 0 0 0 0 blue
90 154 0 0 0 0 green
91 107 0 0 0 0 green
91 301 0 0 0 0 blue
301 95 0 0 0 0 blue
92 108 0 0 0 0 green
92 302 0 0 0 0 blue
302 80 0 0 1 0 blue
93 157 0 0 0 0 green
94 110 0 0 0 0 green
94 303 0 0 0 0 blue
303 82 0 0 1 0 blue
95 159 0 0 0 0 green
96 160 0 0 0 0 green
97 113 0 0 0 0 green
97 304 0 0 0 0 blue
304 98 0 0 0 0 blue
98 162 0 0 0 0 green
99 115 0 0 0 0 green
99 305 0 0 0 0 blue
305 96 0 0 0 1 blue
100 116 0 0 0 0 green
100 306 0 0 0 0 blue
306 101 0 0 0 0 blue
101 165 0 0 0 0 green
102 118 0 0 0 0 green
102 307 0 0 0 0 blue
307 103 0 0 0 0 blue
103 167 0 0 0 0 green
104 168 0 0 0 0 green
105 121 0 0 0 0 green
105 308 0 0 0 0 blue
308 106 0 0 0 0 blue
106 170 0 0 0 0 green
107 123 0 0 0 0 green
107 309 0 0 0 0 blue
309 104 0 0 0 1 blue
108 124 0 0 0 0 green
108 310 0 0 0 0 blue
310 109 0 0 0 0 blue
109 173 0 0 0 0 green
110 126 0 0 0 0 green
110 311 0 0 0 0 blue
311 111 0 0 0 0 blue
111 175 0 0 0 0 green
112 176 0 0 0 0 green
112 312 0 0 0 0 blue
312 116 0 0 0 0 blue
113 65 0 1 0 0 green
114 178 0 0 0 0 green
114 313 0 0 0 0 blue
313 118 0 0 0 0 blue
115 67 0 1 0 0 green
116 68 0 1 0 0 green
117 181 0 0 0 0 green
117 314 0 0 0 0 blue
314 121 0 0 0 0 blue
118 70 0 1 0 0 green
119 183 0 0 0 0 green
119 315 0 0 0 0 blue
315 123 0 0 0 0 blue
120 184 0 0 0 0 green
120 316 0 0 0 0 blue
316 124 0 0 0 0 blue
121 73 0 1 0 0 green
122 186 0 0 0 0 green
122 317 0 0 0 0 blue
317 126 0 0 0 0 blue
123 75 0 1 0 0 green
124 76 0 1 0 0 green
125 189 0 0 0 0 green
125 318 0 0 0 0 blue
318 113 0 0 1 0 blue
126 78 0 1 0 0 green
127 191 0 0 0 0 green
127 319 0 0 0 0 blue
319 115 0 0 1 0 blue
128 192 0 0 0 0 green
129 145 0 0 0 0 green
129 320 0 0 0 0 blue
320 133 0 0 0 0 blue
130 194 0 0 0 0 green
131 147 0 0 0 0 green
131 321 0 0 0 0 blue
321 135 0 0 0 0 blue
132 148 0 0 0 0 green
132 322 0 0 0 0 blue
322 136 0 0 0 0 blue
133 197 0 0 0 0 green
134 150 0 0 0 0 green
134 323 0 0 0 0 blue
323 138 0 0 0 0 blue
135 199 0 0 0 0 green
136 200 0 0 0 0 green
137 153 0 0 0 0 green
137 324 0 0 0 0 blue
324 141 0 0 0 0 blue
138 202 0 0 0 0 green
139 155 0 0 0 0 green
139 325 0 0 0 0 blue
325 143 0 0 0 0 blue
140 156 0 0 0 0 green
140 326 0 0 0 0 blue
326 128 0 0 1 0 blue
141 205 0 0 0 0 green
142 158 0 0 0 0 green
142 327 0 0 0 0 blue
327 130 0 0 1 0 blue
143 207 0 0 0 0 green
144 208 0 0 0 0 green
145 161 0 0 0 0 green
145 328 0 0 0 0 blue
328 146 0 0 0 0 blue
146 210 0 0 0 0 green
147 163 0 0 0 0 green
147 329 0 0 0 0 blue
329 144 0 0 0 1 blue
148 164 0 0 0 0 green
148 330 0 0 0 0 blue
330 149 0 0 0 0 blue
149 213 0 0 0 0 green
150 166 0 0 0 0 green
150 331 0 0 0 0 blue
331 151 0 0 0 0 blue
151 215 0 0 0 0 green
152 216 0 0 0 0 green
153 169 0 0 0 0 green
153 332 0 0 0 0 blue
332 154 0 0 0 0 blue
154 218 0 0 0 0 green
155 171 0 0 0 0 green
155 333 0 0 0 0 blue
333 152 0 0 0 1 blue
156 172 0 0 0 0 green
156 334 0 0 0 0 blue
334 157 0 0 0 0 blue
157 221 0 0 0 0 green
158 174 0 0 0 0 green
158 335 0 0 0 0 blue
335 159 0 0 0 0 blue
159 223 0 0 0 0 green
160 224 0 0 0 0 green
160 336 0 0 0 0 blue
336 164 0 0 0 0 blue
161 177 0 0 0 0 green
162 226 0 0 0 0 green
162 337 0 0 0 0 blue
337 166 0 0 0 0 blue
163 179 0 0 0 0 green
164 180 0 0 0 0 green
165 229 0 0 0 0 green
165 338 0 0 0 0 blue
338 169 0 0 0 0 blue
166 182 0 0 0 0 green
167 231 0 0 0 0 green
167 339 0 0 0 0 blue
339 171 0 0 0 0 blue
168 232 0 0 0 0 green
168 340 0 0 0 0 blue
340 172 0 0 0 0 blue
169 185 0 0 0 0 green
170 234 0 0 0 0 green
170 341 0 0 0 0 blue
341 174 0 0 0 0 blue
171 187 0 0 0 0 green
172 188 0 0 0 0 green
173 237 0 0 0 0 green
173 342 0 0 0 0 blue
342 161 0 0 1 0 blue
174 190 0 0 0 0 green
175 239 0 0 0 0 green
175 343 0 0 0 0 blue
343 163 0 0 1 0 blue
176 240 0 0 0 0 green
176 344 0 0 0 0 blue
344 177 0 0 0 0 blue
177 129 0 1 0 0 green
178 242 0 0 0 0 green
178 345 0 0 0 0 blue
345 179 0 0 0 0 blue
179 131 0 1 0 0 green
180 132 0 1 0 0 green
181 245 0 0 0 0 green
181 346 0 0 0 0 blue
346 182 0 0 0 0 blue
182 134 0 1 0 0 green
183 247 0 0 0 0 green
183 347 0 0 0 0 blue
347 180 0 0 0 1 blue
184 248 0 0 0 0 green
184 348 0 0 0 0 blue
348 185 0 0 0 0 blue
185 137 0 1 0 0 green
186 250 0 0 0 0 green
186 349 0 0 0 0 blue
349 187 0 0 0 0 blue
187 139 0 1 0 0 green
188 140 0 1 0 0 green
189 253 0 0 0 0 green
189 350 0 0 0 0 blue
350 190 0 0 0 0 blue
190 142 0 1 0 0 green
191 255 0 0 0 0 green
191 351 0 0 0 0 blue
351 188 0 0 0 1 blue
192 0 1 0 0 0 green
193 209 0 0 0 0 green
193 352 0 0 0 0 blue
352 194 0 0 0 0 blue
194 2 1 0 0 0 green
195 211 0 0 0 0 green
195 353 0 0 0 0 blue
353 192 0 0 0 1 blue
196 212 0 0 0 0 green
196 354 0 0 0 0 blue
354 197 0 0 0 0 blue
197 5 1 0 0 0 green
198 214 0 0 0 0 green
198 355 0 0 0 0 blue
355 199 0 0 0 0 blue
199 7 1 0 0 0 green
200 8 1 0 0 0 green
201 217 0 0 0 0 green
201 356 0 0 0 0 blue
356 202 0 0 0 0 blue
202 10 1 0 0 0 green
203 219 0 0 0 0 green
203 357 0 0 0 0 blue
357 200 0 0 0 1 blue
204 220 0 0 0 0 green
204 358 0 0 0 0 blue
358 205 0 0 0 0 blue
205 13 1 0 0 0 green
206 222 0 0 0 0 green
206 359 0 0 0 0 blue
359 207 0 0 0 0 blue
207 15 1 0 0 0 green
208 16 1 0 0 0 green
208 360 0 0 0 0 blue
360 212 0 0 0 0 blue
209 225 0 0 0 0 green
210 18 1 0 0 0 green
210 361 0 0 0 0 blue
361 214 0 0 0 0 blue
211 227 0 0 0 0 green
212 228 0 0 0 0 green
213 21 1 0 0 0 green
213 362 0 0 0 0 blue
362 217 0 0 0 0 blue
214 230 0 0 0 0 green
215 23 1 0 0 0 green
215 363 0 0 0 0 blue
363 219 0 0 0 0 blue
216 24 1 0 0 0 green
216 364 0 0 0 0 blue
364 220 0 0 0 0 blue
217 233 0 0 0 0 green
218 26 1 0 0 0 green
218 365 0 0 0 0 blue
365 222 0 0 0 0 blue
219 235 0 0 0 0 green
220 236 0 0 0 0 green
221 29 1 0 0 0 green
221 366 0 0 0 0 blue
366 209 0 0 1 0 blue
222 238 0 0 0 0 green
223 31 1 0 0 0 green
223 367 0 0 0 0 blue
367 211 0 0 1 0 blue
224 32 1 0 0 0 green
224 368 0 0 0 0 blue
368 225 0 0 0 0 blue
225 241 0 0 0 0 green
226 34 1 0 0 0 green
226 369 0 0 0 0 blue
369 227 0 0 0 0 blue
227 243 0 0 0 0 green
228 244 0 0 0 0 green
229 37 1 0 0 0 green
229 370 0 0 0 0 blue
370 230 0 0 0 0 blue
230 246 0 0 0 0 green
231 39 1 0 0 0 green
231 371 0 0 0 0 blue
371 228 0 0 0 1 blue
232 40 1 0 0 0 green
232 372 0 0 0 0 blue
372 233 0 0 0 0 blue
233 249 0 0 0 0 green
234 42 1 0 0 0 green
234 373 0 0 0 0 blue
373 235 0 0 0 0 blue
235 251 0 0 0 0 green
236 252 0 0 0 0 green
237 45 1 0 0 0 green
237 374 0 0 0 0 blue
374 238 0 0 0 0 blue
238 254 0 0 0 0 green
239 47 1 0 0 0 green
239 375 0 0 0 0 blue
375 236 0 0 0 1 blue
240 48 1 0 0 0 green
241 193 0 1 0 0 green
241 376 0 0 0 0 blue
376 245 0 0 0 0 blue
242 50 1 0 0 0 green
243 195 0 1 0 0 green
243 377 0 0 0 0 blue
377 247 0 0 0 0 blue
244 196 0 1 0 0 green
244 378 0 0 0 0 blue
378 248 0 0 0 0 blue
245 53 1 0 0 0 green
246 198 0 1 0 0 green
246 379 0 0 0 0 blue
379 250 0 0 0 0 blue
247 55 1 0 0 0 green
248 56 1 0 0 0 green
249 201 0 1 0 0 green
249 380 0 0 0 0 blue
380 253 0 0 0 0 blue
250 58 1 0 0 0 green
251 203 0 1 0 0 green
251 381 0 0 0 0 blue
381 255 0 0 0 0 blue
252 204 0 1 0 0 green
252 382 0 0 0 0 blue
382 240 0 0 1 0 blue
253 61 1 0 0 0 green
254 206 0 1 0 0 green
254 383 0 0 0 0 blue
383 242 0 0 1 0 blue
255 63 1 0 0 0 green
)CELL";

}  // namespace

std::string builtin_cell_text(const std::string &name) {
    if (name == "square-2d") return kCell_square_2d;
    if (name == "diamond-3d") return kCell_diamond_3d;
    if (name == "two-layer-logical-square") return kCell_two_layer_logical_square;
    if (name == "brickwork-mod-2d") return kCell_brickwork_mod_2d;
    if (name == "b103-standard-3d") return kCell_b103_standard_3d;
    if (name == "b103-mod-3d") return kCell_b103_mod_3d;
    if (name == "b103-mod-4d") return kCell_b103_mod_4d;
    throw std::invalid_argument("no built-in cell named: " + name);
}

}  // namespace perc::lattice
